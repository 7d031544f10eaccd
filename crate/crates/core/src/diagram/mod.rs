//! Oriented link diagrams as rotation systems.
//!
//! A crossing lists its four semi-arcs counterclockwise. After parsing, slot 0
//! is always the incoming under-strand, so slot 2 is the outgoing under-strand
//! and the over-strand enters at slot 3 (positive crossing) or slot 1
//! (negative crossing). Semi-arcs without crossings are free loops.
//!
//! Every semi-arc has a left and a right side with respect to its orientation.
//! The normal points left: crossing a semi-arc from its right side to its left
//! side raises the region index by one and turns a region color `m` into `m ◁ a`.

mod moves;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::OrbitMap;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn parse(s: &str) -> Result<Side> {
        match s.trim().to_ascii_lowercase().as_str() {
            "l" | "left" => Ok(Side::Left),
            "r" | "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got {s:?}"))),
        }
    }

    fn bit(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// One side of one semi-arc, by semi-arc label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Incidence {
    pub semiarc: u32,
    pub side: Side,
}

impl Incidence {
    pub fn new(semiarc: u32, side: Side) -> Self {
        Incidence { semiarc, side }
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.semiarc, self.side)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    In,
    Out,
}

impl Orient {
    fn flip(self) -> Orient {
        match self {
            Orient::In => Orient::Out,
            Orient::Out => Orient::In,
        }
    }
}

fn default_over() -> u8 {
    1
}

fn is_default_over(x: &u8) -> bool {
    *x == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    /// Semi-arc labels counterclockwise; `rot[0]` is an incoming strand.
    pub rot: [u32; 4],
    /// Which slot pair is the over-strand: 0 for slots 0/2, 1 for slots 1/3.
    #[serde(default = "default_over", skip_serializing_if = "is_default_over")]
    pub over: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orients: Option<[Orient; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementJson {
    /// A side on the unbounded face of a split piece, as drawn on its own.
    pub outer: Incidence,
    /// The face of the rest of the diagram that piece sits in; `null` for the
    /// unbounded face.
    #[serde(rename = "in")]
    pub inside: Option<Incidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub v: u32,
    pub crossings: Vec<CrossingJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loops: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub placements: Vec<PlacementJson>,
    pub exterior: Incidence,
    /// One semi-arc label per component, fixing the component order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<u32>>,
}

/// A crossing in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Semi-arc indices, slot 0 = incoming under-strand, counterclockwise.
    pub slots: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out_slot(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    pub fn is_outgoing(&self, slot: usize) -> bool {
        slot == 2 || slot == self.over_out_slot()
    }
}

/// Per-region indices relative to the exterior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexTable {
    pub total: Vec<i64>,
    /// `per_component[r][j]`
    pub per_component: Vec<Vec<i64>>,
}

/// Region coloring by index parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    White,
    Black,
}

/// Everything about one crossing the weights need.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingGeometry {
    pub sign: i8,
    /// Region on the right of both strands.
    pub source: usize,
    /// Regions between slots `s` and `s + 1`, for `s = 0..4`.
    pub quadrants: [usize; 4],
    /// Arc whose color is `a` in `ω(a, b)`.
    pub a_arc: usize,
    /// The over-arc.
    pub b_arc: usize,
    /// The other under-arc, colored `a ◁ b`.
    pub ab_arc: usize,
    pub under_in_arc: usize,
    pub under_out_arc: usize,
    /// Checkerboard sign: `+1` iff the quadrant before the outgoing over-strand is white.
    pub positive_sign: i8,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    labels: Vec<u32>,
    crossings: Vec<Crossing>,
    loops: Vec<usize>,
    placements: Vec<PlacementJson>,
    component_hints: Option<Vec<u32>>,
    /// `(crossing, slot)` where each semi-arc ends and starts.
    head: Vec<Option<(usize, usize)>>,
    tail: Vec<Option<(usize, usize)>>,
    next: Vec<usize>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    arcs: Vec<Vec<usize>>,
    arc_of: Vec<usize>,
    piece_of: Vec<usize>,
    pieces: usize,
    regions: Vec<Vec<Incidence>>,
    region_of: Vec<[usize; 2]>,
    exterior: usize,
    index: IndexTable,
    geometry: Vec<CrossingGeometry>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidDiagram(msg.into())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Decides the direction of every slot from `rot[0]` being incoming, the
/// optional `orients`, and the fact that a semi-arc leaves one slot and enters another.
fn orient_slots(raw: &[CrossingJson], occ: &HashMap<u32, Vec<(usize, usize)>>) -> Result<Vec<[Orient; 4]>> {
    let mut dir: Vec<[Option<Orient>; 4]> = vec![[None; 4]; raw.len()];
    let mut queue = VecDeque::new();
    let set = |dir: &mut Vec<[Option<Orient>; 4]>, queue: &mut VecDeque<(usize, usize)>, c: usize, s: usize, o: Orient| {
        match dir[c][s] {
            Some(p) if p != o => Err(bad(format!("orientation conflict at crossing {c}, slot {s}"))),
            Some(_) => Ok(()),
            None => {
                dir[c][s] = Some(o);
                queue.push_back((c, s));
                Ok(())
            }
        }
    };
    for (c, x) in raw.iter().enumerate() {
        set(&mut dir, &mut queue, c, 0, Orient::In)?;
        if let Some(o) = x.orients {
            for (s, &d) in o.iter().enumerate() {
                set(&mut dir, &mut queue, c, s, d)?;
            }
        }
    }
    while let Some((c, s)) = queue.pop_front() {
        let o = dir[c][s].expect("queued slots are set");
        set(&mut dir, &mut queue, c, (s + 2) % 4, o.flip())?;
        let label = raw[c].rot[s];
        for &(c2, s2) in &occ[&label] {
            if (c2, s2) != (c, s) {
                set(&mut dir, &mut queue, c2, s2, o.flip())?;
            }
        }
    }
    dir.into_iter()
        .enumerate()
        .map(|(c, d)| {
            let mut out = [Orient::In; 4];
            for s in 0..4 {
                out[s] = d[s].ok_or_else(|| bad(format!("orientation of crossing {c} is undetermined; give \"orients\"")))?;
            }
            Ok(out)
        })
        .collect()
}

impl Diagram {
    pub fn from_json(j: DiagramJson) -> Result<Self> {
        if j.v != 1 {
            return Err(Error::Parse(format!("unsupported diagram version {}", j.v)));
        }
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, x) in j.crossings.iter().enumerate() {
            if x.over > 1 {
                return Err(bad(format!("crossing {c}: over must be 0 or 1")));
            }
            for (s, &l) in x.rot.iter().enumerate() {
                occ.entry(l).or_default().push((c, s));
            }
        }
        for (&l, v) in &occ {
            if v.len() != 2 {
                return Err(bad(format!("semi-arc {l} has {} ends at crossings, expected 2", v.len())));
            }
        }
        let mut labels: Vec<u32> = occ.keys().copied().collect();
        for &l in &j.loops {
            if occ.contains_key(&l) || labels.contains(&l) {
                return Err(bad(format!("free loop {l} is used twice")));
            }
            labels.push(l);
        }
        labels.sort_unstable();
        if labels.is_empty() {
            return Err(bad("empty diagram"));
        }
        let idx = |l: u32| labels.binary_search(&l).map_err(|_| bad(format!("unknown semi-arc {l}")));

        let dirs = orient_slots(&j.crossings, &occ)?;
        let mut crossings = Vec::with_capacity(j.crossings.len());
        for (c, x) in j.crossings.iter().enumerate() {
            let p = x.over as usize;
            let under = [1 - p, 3 - p];
            let u = *under.iter().find(|&&s| dirs[c][s] == Orient::In).expect("one end of a strand is incoming");
            let mut slots = [0; 4];
            for k in 0..4 {
                slots[k] = idx(x.rot[(u + k) % 4])?;
            }
            let over_in = (0..4).find(|&k| k % 2 == 1 && dirs[c][(u + k) % 4] == Orient::In).expect("over strand");
            crossings.push(Crossing { slots, sign: if over_in == 3 { 1 } else { -1 } });
        }
        let loops = j.loops.iter().map(|&l| idx(l)).collect::<Result<Vec<_>>>()?;
        Self::build(labels, crossings, loops, j.placements, j.exterior, j.components)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }

    fn build(
        labels: Vec<u32>,
        crossings: Vec<Crossing>,
        loops: Vec<usize>,
        placements: Vec<PlacementJson>,
        exterior: Incidence,
        component_hints: Option<Vec<u32>>,
    ) -> Result<Self> {
        let e = labels.len();
        let lookup = |l: u32| labels.binary_search(&l).map_err(|_| bad(format!("unknown semi-arc {l}")));
        let mut head = vec![None; e];
        let mut tail = vec![None; e];
        for (c, x) in crossings.iter().enumerate() {
            for s in 0..4 {
                let slot = if x.is_outgoing(s) { &mut tail } else { &mut head };
                if slot[x.slots[s]].replace((c, s)).is_some() {
                    return Err(bad(format!("semi-arc {} runs the wrong way", labels[x.slots[s]])));
                }
            }
        }
        let mut next = vec![0; e];
        for a in 0..e {
            next[a] = match head[a] {
                Some((c, s)) => crossings[c].slots[(s + 2) % 4],
                None => a,
            };
        }

        // components, ordered by the hints or by smallest label
        let cycles = OrbitMap::from_generators(e, |a, f| f(next[a]));
        let mut starts: Vec<usize> = cycles.orbits().iter().map(|o| o[0]).collect();
        if let Some(h) = &component_hints {
            if h.len() != starts.len() {
                return Err(bad(format!("{} component hints for {} components", h.len(), starts.len())));
            }
            let mut ordered = Vec::new();
            for &l in h {
                let a = lookup(l)?;
                if ordered.iter().any(|&b| cycles.orbit_of(b) == cycles.orbit_of(a)) {
                    return Err(bad(format!("two component hints on the component of {l}")));
                }
                ordered.push(a);
            }
            starts = ordered;
        }
        let mut components = Vec::new();
        let mut component_of = vec![0; e];
        for (j, &s) in starts.iter().enumerate() {
            let mut cyc = vec![s];
            let mut a = next[s];
            while a != s {
                cyc.push(a);
                a = next[a];
            }
            for &a in &cyc {
                component_of[a] = j;
            }
            components.push(cyc);
        }

        // arcs break where a strand passes under
        let mut arc_of = vec![usize::MAX; e];
        let mut arcs: Vec<Vec<usize>> = Vec::new();
        let starts_arc = |a: usize| matches!(tail[a], Some((_, 2)));
        let mut order: Vec<usize> = (0..e).filter(|&a| starts_arc(a)).collect();
        for cyc in &components {
            if !cyc.iter().any(|&a| starts_arc(a)) {
                order.push(*cyc.iter().min().expect("non-empty"));
            }
        }
        for s in order {
            let mut arc = vec![s];
            let mut a = s;
            while let Some((_, slot)) = head[a] {
                if slot == 0 {
                    break;
                }
                a = next[a];
                if a == s {
                    break;
                }
                arc.push(a);
            }
            arcs.push(arc);
        }
        arcs.sort_by_key(|arc| *arc.iter().min().expect("non-empty"));
        for (i, arc) in arcs.iter().enumerate() {
            for &a in arc {
                arc_of[a] = i;
            }
        }
        debug_assert!(arc_of.iter().all(|&x| x != usize::MAX));

        // connected pieces
        let mut parent: Vec<usize> = (0..e).collect();
        for x in &crossings {
            for s in 1..4 {
                union(&mut parent, x.slots[0], x.slots[s]);
            }
        }
        let roots: Vec<usize> = (0..e).map(|a| find(&mut parent, a)).collect();
        let piece_map = OrbitMap::from_labels(&roots);
        let piece_of: Vec<usize> = (0..e).map(|a| piece_map.orbit_of(a)).collect();
        let pieces = piece_map.count();

        // faces, traced with the face on the left of the walker
        let mut face_of = vec![[usize::MAX; 2]; e];
        let mut faces: Vec<Vec<(usize, Side)>> = Vec::new();
        for a in 0..e {
            for side in [Side::Left, Side::Right] {
                if face_of[a][side.bit()] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut face = Vec::new();
                let (mut cur, mut cs) = (a, side);
                loop {
                    if face_of[cur][cs.bit()] != usize::MAX {
                        break;
                    }
                    face_of[cur][cs.bit()] = id;
                    face.push((cur, cs));
                    let end = if cs == Side::Left { head[cur] } else { tail[cur] };
                    let Some((c, s)) = end else { break };
                    let s2 = (s + 3) % 4;
                    let x = &crossings[c];
                    cur = x.slots[s2];
                    cs = if x.is_outgoing(s2) { Side::Left } else { Side::Right };
                }
                if (cur, cs) != (a, side) {
                    return Err(bad("face tracing did not close up"));
                }
                faces.push(face);
            }
        }
        let mut v = vec![0i64; pieces];
        let mut ed = vec![0i64; pieces];
        let mut f = vec![0i64; pieces];
        for x in &crossings {
            v[piece_of[x.slots[0]]] += 1;
        }
        for &l in &loops {
            v[piece_of[l]] += 1;
        }
        for a in 0..e {
            ed[piece_of[a]] += 1;
        }
        for face in &faces {
            f[piece_of[face[0].0]] += 1;
        }
        for p in 0..pieces {
            if v[p] - ed[p] + f[p] != 2 {
                return Err(bad(format!(
                    "rotation system is not planar: V - E + F = {} - {} + {} on a connected piece",
                    v[p], ed[p], f[p]
                )));
            }
        }

        // merge faces across split pieces
        let inc_face = |i: &Incidence| -> Result<usize> { Ok(face_of[lookup(i.semiarc)?][i.side.bit()]) };
        let mut fparent: Vec<usize> = (0..faces.len()).collect();
        let mut placements = placements;
        if pieces == 1 {
            if placements.iter().any(|p| p.inside.is_some()) {
                return Err(bad("a connected diagram cannot be placed inside itself"));
            }
            placements.clear();
        } else {
            let mut placed = vec![None; pieces];
            for (i, p) in placements.iter().enumerate() {
                let piece = piece_of[lookup(p.outer.semiarc)?];
                if placed[piece].replace(i).is_some() {
                    return Err(bad(format!("piece containing {} is placed twice", p.outer.semiarc)));
                }
                if let Some(inside) = &p.inside {
                    if piece_of[lookup(inside.semiarc)?] == piece {
                        return Err(bad(format!("piece containing {} is placed inside itself", p.outer.semiarc)));
                    }
                }
            }
            if let Some(p) = placed.iter().position(|x| x.is_none()) {
                return Err(bad(format!("{pieces} split pieces need placements; piece {p} has none")));
            }
            // nesting must be a forest
            for start in 0..pieces {
                let mut p = start;
                for _ in 0..=pieces {
                    let pl = &placements[placed[p].expect("checked")];
                    match &pl.inside {
                        Some(i) => p = piece_of[lookup(i.semiarc)?],
                        None => break,
                    }
                    if p == start {
                        return Err(bad("placements nest in a cycle"));
                    }
                }
            }
            let mut top = None;
            for p in &placements {
                let outer = inc_face(&p.outer)?;
                match &p.inside {
                    Some(i) => union(&mut fparent, outer, inc_face(i)?),
                    None => {
                        if let Some(t) = top {
                            union(&mut fparent, outer, t);
                        }
                        top = Some(outer);
                    }
                }
            }
            if top.is_none() {
                return Err(bad("some piece must sit in the unbounded face"));
            }
        }

        // regions, numbered by smallest incidence
        let mut groups: BTreeMap<usize, Vec<Incidence>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            let r = find(&mut fparent, fi);
            groups.entry(r).or_default().extend(face.iter().map(|&(a, s)| Incidence::new(labels[a], s)));
        }
        let mut regions: Vec<Vec<Incidence>> = groups.into_values().collect();
        for r in &mut regions {
            r.sort();
        }
        regions.sort_by_key(|r| r[0]);
        let mut region_of = vec![[0; 2]; e];
        for (ri, r) in regions.iter().enumerate() {
            for i in r {
                region_of[lookup(i.semiarc)?][i.side.bit()] = ri;
            }
        }
        let exterior = region_of[lookup(exterior.semiarc).map_err(|_| bad("exterior names an unknown semi-arc"))?]
            [exterior.side.bit()];

        let mut d = Diagram {
            labels,
            crossings,
            loops,
            placements,
            component_hints,
            head,
            tail,
            next,
            components,
            component_of,
            arcs,
            arc_of,
            piece_of,
            pieces,
            regions,
            region_of,
            exterior,
            index: IndexTable { total: Vec::new(), per_component: Vec::new() },
            geometry: Vec::new(),
        };
        d.index = d.propagate_indices(|_, _| true)?;
        d.geometry = (0..d.crossings.len()).map(|c| d.compute_geometry(c)).collect();
        Ok(d)
    }

    /// Breadth-first index propagation from the exterior. `use_edge(semiarc, from_region)`
    /// may restrict which semi-arcs are crossed; every semi-arc is still checked
    /// for consistency at the end.
    pub(crate) fn propagate_indices(&self, mut use_edge: impl FnMut(usize, usize) -> bool) -> Result<IndexTable> {
        let r = self.regions.len();
        let k = self.components.len();
        let mut per: Vec<Option<Vec<i64>>> = vec![None; r];
        let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); r];
        for a in 0..self.labels.len() {
            let [left, right] = self.region_of[a];
            adj[right].push((a, left, 1));
            adj[left].push((a, right, -1));
        }
        per[self.exterior] = Some(vec![0; k]);
        let mut queue = VecDeque::from([self.exterior]);
        while let Some(x) = queue.pop_front() {
            for &(a, y, step) in &adj[x] {
                if per[y].is_some() || !use_edge(a, x) {
                    continue;
                }
                let mut v = per[x].clone().expect("visited");
                v[self.component_of[a]] += step;
                per[y] = Some(v);
                queue.push_back(y);
            }
        }
        let per: Vec<Vec<i64>> = per
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Inconsistent(format!("region {i} is unreachable from the exterior"))))
            .collect::<Result<_>>()?;
        for a in 0..self.labels.len() {
            let [left, right] = self.region_of[a];
            let mut expect = per[right].clone();
            expect[self.component_of[a]] += 1;
            if per[left] != expect {
                return Err(Error::Inconsistent(format!(
                    "index jumps inconsistently across semi-arc {}",
                    self.labels[a]
                )));
            }
        }
        let total = per.iter().map(|v| v.iter().sum()).collect();
        Ok(IndexTable { total, per_component: per })
    }

    fn corner(&self, c: usize, s: usize) -> usize {
        let x = &self.crossings[c];
        let side = if x.is_outgoing(s) { Side::Left } else { Side::Right };
        self.region_of[x.slots[s]][side.bit()]
    }

    fn compute_geometry(&self, c: usize) -> CrossingGeometry {
        let x = &self.crossings[c];
        let quadrants = [0, 1, 2, 3].map(|s| self.corner(c, s));
        let under_in_arc = self.arc_of[x.slots[0]];
        let under_out_arc = self.arc_of[x.slots[2]];
        let (a_arc, ab_arc, source) = if x.sign > 0 {
            (under_in_arc, under_out_arc, quadrants[0])
        } else {
            (under_out_arc, under_in_arc, quadrants[1])
        };
        let before_over_out = quadrants[(x.over_out_slot() + 3) % 4];
        CrossingGeometry {
            sign: x.sign,
            source,
            quadrants,
            a_arc,
            b_arc: self.arc_of[x.slots[1]],
            ab_arc,
            under_in_arc,
            under_out_arc,
            positive_sign: if self.index.total[before_over_out].rem_euclid(2) == 0 { 1 } else { -1 },
        }
    }

    pub fn semiarc_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn semiarc_index(&self, label: u32) -> Result<usize> {
        self.labels.binary_search(&label).map_err(|_| bad(format!("unknown semi-arc {label}")))
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> &[usize] {
        &self.loops
    }

    /// Semi-arc indices of each arc, in order along the orientation.
    pub fn arcs(&self) -> &[Vec<usize>] {
        &self.arcs
    }

    pub fn arc_of(&self, semiarc: usize) -> usize {
        self.arc_of[semiarc]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Semi-arc indices of each component, cyclically ordered.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, semiarc: usize) -> usize {
        self.component_of[semiarc]
    }

    pub fn arc_component(&self, arc: usize) -> usize {
        self.component_of[self.arcs[arc][0]]
    }

    /// The semi-arc following `semiarc` along its component.
    pub fn successor(&self, semiarc: usize) -> usize {
        self.next[semiarc]
    }

    pub fn head(&self, semiarc: usize) -> Option<(usize, usize)> {
        self.head[semiarc]
    }

    pub fn tail(&self, semiarc: usize) -> Option<(usize, usize)> {
        self.tail[semiarc]
    }

    /// Number of connected pieces of the underlying plane graph.
    pub fn piece_count(&self) -> usize {
        self.pieces
    }

    pub fn regions(&self) -> &[Vec<Incidence>] {
        &self.regions
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    /// Regions on the left and right of a semi-arc.
    pub fn sides(&self, semiarc: usize) -> (usize, usize) {
        let [l, r] = self.region_of[semiarc];
        (l, r)
    }

    pub fn region_at(&self, i: Incidence) -> Result<usize> {
        Ok(self.region_of[self.semiarc_index(i.semiarc)?][i.side.bit()])
    }

    pub fn exterior(&self) -> usize {
        self.exterior
    }

    pub fn indices(&self) -> &IndexTable {
        &self.index
    }

    pub fn geometry(&self) -> &[CrossingGeometry] {
        &self.geometry
    }

    pub fn checkerboard(&self) -> Vec<Shade> {
        self.index
            .total
            .iter()
            .map(|&i| if i.rem_euclid(2) == 0 { Shade::White } else { Shade::Black })
            .collect()
    }

    /// Orientation of each slot of a crossing, derived from the sign.
    fn orients(x: &Crossing) -> [Orient; 4] {
        let mut o = [Orient::In; 4];
        for (s, d) in o.iter_mut().enumerate() {
            if x.is_outgoing(s) {
                *d = Orient::Out;
            }
        }
        o
    }

    /// Normal form JSON. `orients` is written only where the rest of the
    /// diagram does not already force it.
    pub fn to_json(&self) -> DiagramJson {
        let mut crossings: Vec<CrossingJson> = self
            .crossings
            .iter()
            .map(|x| CrossingJson { rot: x.slots.map(|a| self.labels[a]), over: 1, orients: None })
            .collect();
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (s, &l) in x.rot.iter().enumerate() {
                occ.entry(l).or_default().push((c, s));
            }
        }
        let mut c = 0;
        while c < crossings.len() && orient_slots(&crossings, &occ).is_err() {
            crossings[c].orients = Some(Self::orients(&self.crossings[c]));
            c += 1;
        }
        DiagramJson {
            v: 1,
            crossings,
            loops: self.loops.iter().map(|&a| self.labels[a]).collect(),
            placements: if self.pieces > 1 { self.placements.clone() } else { Vec::new() },
            exterior: self.regions[self.exterior][0],
            components: self.component_hints.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("diagram serializes")
    }

    fn max_label(&self) -> u32 {
        *self.labels.last().expect("non-empty")
    }
}

pub use moves::{r1_insert, r2_insert};

/// The closure of a braid word on `strands` strands, letter `i` standing for
/// `σ_i` and `-i` for its inverse. Strands no letter touches become free loops.
/// The exterior is taken on the right of the first strand.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    if strands == 0 {
        return Err(bad("a braid needs at least one strand"));
    }
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next_label = strands as u32;
    let mut rots = Vec::new();
    for &w in word {
        let i = w.unsigned_abs() as usize;
        if i == 0 || i >= strands {
            return Err(bad(format!("letter {w} out of range for {strands} strands")));
        }
        let (lo, hi) = (cur[i - 1], cur[i]);
        let (out_lo, out_hi) = (next_label + 1, next_label + 2);
        next_label += 2;
        rots.push(if w > 0 {
            ([lo, out_lo, out_hi, hi], [Orient::In, Orient::Out, Orient::Out, Orient::In])
        } else {
            ([hi, lo, out_lo, out_hi], [Orient::In, Orient::In, Orient::Out, Orient::Out])
        });
        cur[i - 1] = out_lo;
        cur[i] = out_hi;
    }
    let close: HashMap<u32, u32> = cur.iter().zip(1..).map(|(&last, first)| (last, first)).collect();
    let crossings = rots
        .into_iter()
        .map(|(rot, orients): ([u32; 4], _)| CrossingJson {
            rot: rot.map(|l| *close.get(&l).unwrap_or(&l)),
            over: 1,
            orients: Some(orients),
        })
        .collect();
    let loops: Vec<u32> = (1..=strands as u32).filter(|l| cur[*l as usize - 1] == *l).collect();
    let mut json = DiagramJson {
        v: 1,
        crossings,
        loops: loops.clone(),
        placements: Vec::new(),
        exterior: Incidence::new(1, Side::Right),
        components: None,
    };
    if loops.len() + usize::from(loops.len() < strands) > 1 {
        let mut outer: Vec<u32> = loops;
        if outer.len() < strands {
            outer.push((1..=strands as u32).find(|l| !outer.contains(l)).expect("a braided strand"));
        }
        json.placements = outer
            .into_iter()
            .map(|l| PlacementJson { outer: Incidence::new(l, Side::Right), inside: None })
            .collect();
    }
    Diagram::from_json(json)
}

#[cfg(test)]
mod tests;
