//! Quandle colorings of arcs and region colorings by a quandle module.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ModElem, OrbitMap, QModule, Quandle};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// One quandle element per arc, in arc order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcColoring(pub Vec<usize>);

/// An arc coloring together with one module element per region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowColoring {
    pub arcs: ArcColoring,
    pub regions: Vec<ModElem>,
}

/// `(a, b, a ◁ b)` arc triples, one per crossing.
fn relations(d: &Diagram) -> Vec<[usize; 3]> {
    d.geometry().iter().map(|g| [g.a_arc, g.b_arc, g.ab_arc]).collect()
}

/// Fills in everything forced by the crossing relations. Returns false on a conflict.
fn propagate(q: &Quandle, rel: &[[usize; 3]], colors: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for &[a, b, ab] in rel {
            let (ca, cb, cab) = (colors[a], colors[b], colors[ab]);
            match (ca, cb, cab) {
                (Some(x), Some(y), Some(z)) if q.op(x, y) != z => return false,
                (Some(x), Some(y), None) => {
                    colors[ab] = Some(q.op(x, y));
                    changed = true;
                }
                (None, Some(y), Some(z)) => {
                    colors[a] = Some(q.inv(z, y));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(q: &Quandle, rel: &[[usize; 3]], mut colors: Vec<Option<usize>>, out: &mut Vec<ArcColoring>) {
    if !propagate(q, rel, &mut colors) {
        return;
    }
    match colors.iter().position(Option::is_none) {
        None => out.push(ArcColoring(colors.into_iter().map(|c| c.expect("complete")).collect())),
        Some(i) => {
            for x in 0..q.size() {
                let mut next = colors.clone();
                next[i] = Some(x);
                search(q, rel, next, out);
            }
        }
    }
}

/// All completions of a partial coloring, sorted.
pub fn extend_coloring(d: &Diagram, q: &Quandle, partial: &[Option<usize>]) -> Vec<ArcColoring> {
    let rel = relations(d);
    let mut out = Vec::new();
    search(q, &rel, partial.to_vec(), &mut out);
    out.sort();
    out
}

/// Every coloring of the arcs, in lexicographic order.
pub fn enumerate_colorings(d: &Diagram, q: &Quandle) -> Vec<ArcColoring> {
    let rel = relations(d);
    let n = d.arc_count();
    let mut out: Vec<ArcColoring> = (0..q.size())
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut seed = vec![None; n];
            seed[0] = Some(x);
            let mut found = Vec::new();
            search(q, &rel, seed, &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

pub fn is_coloring(d: &Diagram, q: &Quandle, c: &ArcColoring) -> bool {
    c.0.len() == d.arc_count()
        && c.0.iter().all(|&x| x < q.size())
        && relations(d).iter().all(|&[a, b, ab]| q.op(c.0[a], c.0[b]) == c.0[ab])
}

/// Extends an arc coloring to the regions, starting from `exterior` on the
/// exterior region. Crossing a semi-arc colored `a` from its right to its left
/// turns `m` into `m ◁ a`.
pub fn propagate_shadow(d: &Diagram, c: &ArcColoring, module: &QModule, exterior: &ModElem) -> Result<ShadowColoring> {
    if !module.contains(exterior) {
        return Err(Error::SizeMismatch(format!("exterior color {exterior} is not in the module")));
    }
    let r = d.region_count();
    let color = |a: usize| c.0[d.arc_of(a)];
    let mut adj: Vec<Vec<(usize, usize, i8)>> = vec![Vec::new(); r];
    for a in 0..d.semiarc_count() {
        let (left, right) = d.sides(a);
        adj[right].push((a, left, 1));
        adj[left].push((a, right, -1));
    }
    let mut regions: Vec<Option<ModElem>> = vec![None; r];
    regions[d.exterior()] = Some(exterior.clone());
    let mut queue = VecDeque::from([d.exterior()]);
    while let Some(x) = queue.pop_front() {
        for &(a, y, sign) in &adj[x] {
            if regions[y].is_none() {
                regions[y] = Some(module.act(regions[x].as_ref().expect("visited"), color(a), sign));
                queue.push_back(y);
            }
        }
    }
    let regions: Vec<ModElem> = regions.into_iter().map(|m| m.expect("regions are connected")).collect();
    for a in 0..d.semiarc_count() {
        let (left, right) = d.sides(a);
        if module.act(&regions[right], color(a), 1) != regions[left] {
            return Err(Error::Inconsistent(format!(
                "region colors disagree across semi-arc {}; the module action is not lawful",
                d.labels()[a]
            )));
        }
    }
    Ok(ShadowColoring { arcs: c.clone(), regions })
}

pub fn is_shadow_coloring(d: &Diagram, q: &Quandle, module: &QModule, s: &ShadowColoring) -> bool {
    is_coloring(d, q, &s.arcs)
        && s.regions.len() == d.region_count()
        && s.regions.iter().all(|m| module.contains(m))
        && (0..d.semiarc_count()).all(|a| {
            let (left, right) = d.sides(a);
            module.act(&s.regions[right], s.arcs.0[d.arc_of(a)], 1) == s.regions[left]
        })
}

/// Replaces every color `x` by `x ◁^sign c` and every region color `m` by `m ◁^sign c`.
pub fn act(q: &Quandle, module: &QModule, s: &ShadowColoring, c: usize, sign: i8) -> ShadowColoring {
    ShadowColoring {
        arcs: ArcColoring(s.arcs.0.iter().map(|&x| q.op_signed(x, c, sign)).collect()),
        regions: s.regions.iter().map(|m| module.act(m, c, sign)).collect(),
    }
}

/// The orbit carrying the colors of each component.
pub fn component_orbits(d: &Diagram, c: &ArcColoring, orbits: &OrbitMap) -> Result<Vec<usize>> {
    let mut out = vec![usize::MAX; d.component_count()];
    for (arc, &x) in c.0.iter().enumerate() {
        let j = d.arc_component(arc);
        let o = orbits.orbit_of(x);
        if out[j] == usize::MAX {
            out[j] = o;
        } else if out[j] != o {
            return Err(Error::Inconsistent(format!("component {j} carries colors from two orbits")));
        }
    }
    Ok(out)
}

/// Carries a coloring of `from` to `to` through the semi-arc labels the two
/// diagrams share, as after a Reidemeister I or II insertion.
pub fn transfer_coloring(from: &Diagram, to: &Diagram, q: &Quandle, c: &ArcColoring) -> Result<ArcColoring> {
    let mut partial = vec![None; to.arc_count()];
    for (a, &label) in to.labels().iter().enumerate() {
        if let Ok(b) = from.semiarc_index(label) {
            let x = c.0[from.arc_of(b)];
            let slot = &mut partial[to.arc_of(a)];
            if slot.is_some_and(|y| y != x) {
                return Err(Error::Inconsistent(format!("semi-arc {label} joins two differently colored arcs")));
            }
            *slot = Some(x);
        }
    }
    let mut found = extend_coloring(to, q, &partial);
    if found.len() != 1 {
        return Err(Error::Inconsistent(format!("{} extensions of the transferred coloring", found.len())));
    }
    Ok(found.remove(0))
}
