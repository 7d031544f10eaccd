//! Weight sums over crossings and the multisets of weights over all colorings.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffGroup, Elem, ElemJson, ModElem, Scalar};
use crate::cohomology::{
    is_cocycle_on_window, is_link_twisted_cocycle, Cochain, CochainEval, CocycleReport, DifferentialSpec,
    TwistTransport,
};
use crate::coloring::{component_orbits, enumerate_colorings, propagate_shadow, ArcColoring, ShadowColoring};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flavor {
    Classical,
    /// Shadow weights with the exterior region colored `exterior`.
    Shadow { exterior: ModElem },
    Positive,
    Twisted { alpha: Scalar },
    ShadowTwisted { exterior: ModElem, alpha: Scalar },
    /// One unit per orbit of the quandle.
    LinkTwisted { alphas: Vec<Scalar> },
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Classical => "classical",
            Flavor::Shadow { .. } => "shadow",
            Flavor::Positive => "positive",
            Flavor::Twisted { .. } => "twisted",
            Flavor::ShadowTwisted { .. } => "shadow-twisted",
            Flavor::LinkTwisted { .. } => "link-twisted",
        }
    }

    /// The differential whose cocycles this flavor weighs.
    pub fn spec(&self) -> Option<DifferentialSpec> {
        match self {
            Flavor::Classical | Flavor::Shadow { .. } => Some(DifferentialSpec::quandle()),
            Flavor::Positive => Some(DifferentialSpec::positive()),
            Flavor::Twisted { alpha } | Flavor::ShadowTwisted { alpha, .. } => Some(DifferentialSpec::twisted(*alpha)),
            Flavor::LinkTwisted { .. } => None,
        }
    }

    pub fn is_shadow(&self) -> bool {
        matches!(self, Flavor::Shadow { .. } | Flavor::ShadowTwisted { .. })
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Shadow { exterior } => write!(f, "shadow(exterior={exterior})"),
            Flavor::Twisted { alpha } => write!(f, "twisted(alpha={alpha})"),
            Flavor::ShadowTwisted { exterior, alpha } => write!(f, "shadow-twisted(exterior={exterior}, alpha={alpha})"),
            Flavor::LinkTwisted { alphas } => {
                let a: Vec<String> = alphas.iter().map(|s| s.to_string()).collect();
                write!(f, "link-twisted(alphas={})", a.join(","))
            }
            other => f.write_str(other.name()),
        }
    }
}

/// A multiset of coefficient-group elements, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    counts: BTreeMap<Elem, u64>,
}

#[derive(Serialize, Deserialize)]
struct MultisetJson {
    v: u32,
    multiset: Vec<(ElemJson, u64)>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: Elem) {
        self.insert_n(x, 1);
    }

    pub fn insert_n(&mut self, x: Elem, n: u64) {
        if n > 0 {
            *self.counts.entry(x).or_insert(0) += n;
        }
    }

    pub fn count(&self, x: &Elem) -> u64 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Elem, u64)> {
        self.counts.iter().map(|(x, &n)| (x, n))
    }

    pub fn merge(&mut self, other: &WeightMultiset) {
        for (x, n) in other.iter() {
            self.insert_n(x.clone(), n);
        }
    }

    /// Applies `f` to every element, keeping multiplicities.
    pub fn map(&self, f: impl Fn(&Elem) -> Elem) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (x, n) in self.iter() {
            out.insert_n(f(x), n);
        }
        out
    }

    pub fn scale(&self, g: &CoeffGroup, s: Scalar) -> WeightMultiset {
        self.map(|x| g.scale(s, x))
    }

    pub fn to_json_string(&self) -> String {
        let j = MultisetJson { v: 1, multiset: self.iter().map(|(x, n)| (x.to_wire(), n)).collect() };
        serde_json::to_string(&j).expect("multiset serializes")
    }

    pub fn from_json_str(s: &str, g: &CoeffGroup) -> Result<Self> {
        let j: MultisetJson = serde_json::from_str(s)?;
        if j.v != 1 {
            return Err(Error::Parse(format!("unsupported multiset version {}", j.v)));
        }
        let mut out = WeightMultiset::new();
        for (x, n) in j.multiset {
            out.insert_n(Elem::from_wire(x, g)?, n);
        }
        Ok(out)
    }
}

impl FromIterator<Elem> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for x in iter {
            out.insert(x);
        }
        out
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}: {n}")?;
        }
        f.write_str("}")
    }
}

fn signed(sign: i8) -> Scalar {
    Scalar::int(sign as i64)
}

/// `Σ coeff(x) · ω(m(x), a, b)` over crossings.
fn crossing_sum(
    d: &Diagram,
    c: &ArcColoring,
    omega: &dyn CochainEval,
    mut region_color: impl FnMut(usize) -> ModElem,
    mut coeff: impl FnMut(usize) -> Result<Scalar>,
) -> Result<Elem> {
    let g = omega.coeff();
    let mut acc = g.zero();
    for (x, geo) in d.geometry().iter().enumerate() {
        let m = region_color(geo.source);
        let v = omega.eval(&m, &[c.0[geo.a_arc], c.0[geo.b_arc]]);
        g.add_assign(&mut acc, &g.scale(coeff(x)?, &v));
    }
    Ok(acc)
}

/// `Σ ε(x) ω(a, b)`.
pub fn weight_classical(d: &Diagram, c: &ArcColoring, omega: &dyn CochainEval) -> Result<Elem> {
    let zero = omega.module().zero();
    crossing_sum(d, c, omega, |_| zero.clone(), |x| Ok(signed(d.geometry()[x].sign)))
}

/// `Σ ε(x) ω(m, a, b)` with `m` the color of the source region.
pub fn weight_shadow(d: &Diagram, s: &ShadowColoring, omega: &dyn CochainEval) -> Result<Elem> {
    crossing_sum(d, &s.arcs, omega, |r| s.regions[r].clone(), |x| Ok(signed(d.geometry()[x].sign)))
}

/// `Σ ε^pos(x) ω(a, b)` with the checkerboard sign.
pub fn weight_positive(d: &Diagram, c: &ArcColoring, omega: &dyn CochainEval) -> Result<Elem> {
    let zero = omega.module().zero();
    crossing_sum(d, c, omega, |_| zero.clone(), |x| Ok(signed(d.geometry()[x].positive_sign)))
}

fn twist(g: &CoeffGroup, alpha: Scalar, sign: i8, index: i64) -> Result<Scalar> {
    Ok(g.mul_scalars(signed(sign), g.pow(alpha, -index)?))
}

/// `Σ ε(x) α^{-i(x)} ω(a, b)`.
pub fn weight_twisted(d: &Diagram, c: &ArcColoring, omega: &dyn CochainEval, alpha: Scalar) -> Result<Elem> {
    let zero = omega.module().zero();
    let g = omega.coeff();
    crossing_sum(d, c, omega, |_| zero.clone(), |x| {
        let geo = &d.geometry()[x];
        twist(g, alpha, geo.sign, d.indices().total[geo.source])
    })
}

/// `Σ ε(x) α^{-i(x)} ω(m, a, b)`, computed directly from the region indices.
pub fn weight_shadow_twisted(d: &Diagram, s: &ShadowColoring, omega: &dyn CochainEval, alpha: Scalar) -> Result<Elem> {
    let g = omega.coeff();
    crossing_sum(d, &s.arcs, omega, |r| s.regions[r].clone(), |x| {
        let geo = &d.geometry()[x];
        twist(g, alpha, geo.sign, d.indices().total[geo.source])
    })
}

/// The same weight as [`weight_shadow_twisted`], computed as a plain shadow
/// weight over `M × Z` with the exterior colored `(exterior, 0)`.
pub fn weight_shadow_twisted_via_product(
    d: &Diagram,
    c: &ArcColoring,
    omega: &Cochain,
    exterior: &ModElem,
    alpha: Scalar,
) -> Result<Elem> {
    let t = TwistTransport::shadow_twisted(omega, alpha)?;
    let mut ext = exterior.0.clone();
    ext.push(0);
    let s = propagate_shadow(d, c, t.module(), &ModElem(ext))?;
    weight_shadow(d, &s, &t)
}

/// `Σ ε(x) Π_j α_{C*(j)}^{-i_j(x)} ω(a, b)`, with `alphas` indexed by quandle orbit.
pub fn weight_link_twisted(d: &Diagram, c: &ArcColoring, omega: &dyn CochainEval, alphas: &[Scalar]) -> Result<Elem> {
    let q = omega.quandle();
    let g = omega.coeff();
    let orbits = q.orbits();
    if alphas.len() != orbits.count() {
        return Err(Error::SizeMismatch(format!("{} units for {} orbits", alphas.len(), orbits.count())));
    }
    let comp = component_orbits(d, c, &orbits)?;
    let zero = omega.module().zero();
    crossing_sum(d, c, omega, |_| zero.clone(), |x| {
        let geo = &d.geometry()[x];
        let mut s = signed(geo.sign);
        for (j, &i) in d.indices().per_component[geo.source].iter().enumerate() {
            s = g.mul_scalars(s, g.pow(alphas[comp[j]], -i)?);
        }
        Ok(s)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Check the cocycle condition before weighing.
    pub validate: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { validate: true }
    }
}

fn check_unit(g: &CoeffGroup, s: Scalar) -> Result<()> {
    g.check_scalar(s)?;
    if !g.is_unit(s) {
        return Err(Error::NotAUnit(format!("{s} is not a unit of {g}")));
    }
    Ok(())
}

fn report(r: CocycleReport, what: &str) -> Result<()> {
    match r.witness {
        None => Ok(()),
        Some(w) => Err(Error::NotACocycle(format!(
            "{what} fails at module element {}, tuple {:?}: value {}{}",
            w.module_elem,
            w.tuple,
            w.value,
            if w.degenerate { " on a degenerate tuple" } else { "" }
        ))),
    }
}

/// Structural checks always; the cocycle condition when `opts.validate`.
pub fn validate(flavor: &Flavor, omega: &dyn CochainEval, opts: Options) -> Result<()> {
    if omega.degree() != 2 {
        return Err(Error::InvalidDegree(format!("weights need a 2-cochain, got degree {}", omega.degree())));
    }
    let g = omega.coeff();
    let module = omega.module();
    match flavor {
        Flavor::Shadow { exterior } | Flavor::ShadowTwisted { exterior, .. } => {
            if !module.contains(exterior) {
                return Err(Error::SizeMismatch(format!("exterior color {exterior} is not in the module")));
            }
        }
        _ => {
            if module.size() != Some(1) {
                return Err(Error::UnsupportedCarrier(format!(
                    "{} weights need a cochain on the one-element module",
                    flavor.name()
                )));
            }
        }
    }
    match flavor {
        Flavor::Twisted { alpha } | Flavor::ShadowTwisted { alpha, .. } => check_unit(g, *alpha)?,
        Flavor::LinkTwisted { alphas } => {
            for &a in alphas {
                check_unit(g, a)?;
            }
        }
        _ => {}
    }
    if !opts.validate {
        if let Flavor::LinkTwisted { alphas } = flavor {
            let n = omega.quandle().orbits().count();
            if alphas.len() != n {
                return Err(Error::SizeMismatch(format!("{} units for {n} orbits", alphas.len())));
            }
        }
        return Ok(());
    }
    match flavor.spec() {
        Some(spec) => report(is_cocycle_on_window(&spec, omega, true, 2)?, &format!("cocycle condition for {spec}")),
        None => {
            let Flavor::LinkTwisted { alphas } = flavor else { unreachable!() };
            report(is_link_twisted_cocycle(omega, alphas, true)?, "link-twisted cocycle condition")
        }
    }
}

/// The weight of one arc coloring under `flavor`. Shadow flavors extend the
/// coloring from their exterior color.
pub fn weight(d: &Diagram, flavor: &Flavor, omega: &dyn CochainEval, c: &ArcColoring) -> Result<Elem> {
    match flavor {
        Flavor::Classical => weight_classical(d, c, omega),
        Flavor::Shadow { exterior } => weight_shadow(d, &propagate_shadow(d, c, omega.module(), exterior)?, omega),
        Flavor::Positive => weight_positive(d, c, omega),
        Flavor::Twisted { alpha } => weight_twisted(d, c, omega, *alpha),
        Flavor::ShadowTwisted { exterior, alpha } => {
            weight_shadow_twisted(d, &propagate_shadow(d, c, omega.module(), exterior)?, omega, *alpha)
        }
        Flavor::LinkTwisted { alphas } => weight_link_twisted(d, c, omega, alphas),
    }
}

fn weights(d: &Diagram, flavor: &Flavor, omega: &dyn CochainEval, opts: Options) -> Result<Vec<(ArcColoring, Elem)>> {
    validate(flavor, omega, opts)?;
    let colorings = enumerate_colorings(d, omega.quandle());
    colorings
        .into_par_iter()
        .map(|c| weight(d, flavor, omega, &c).map(|w| (c, w)))
        .collect()
}

/// The multiset of weights over all colorings.
pub fn invariant_multiset(d: &Diagram, flavor: &Flavor, omega: &dyn CochainEval, opts: Options) -> Result<WeightMultiset> {
    Ok(weights(d, flavor, omega, opts)?.into_iter().map(|(_, w)| w).collect())
}

/// The same multiset, split by the tuple of orbits the components are colored from.
pub fn orbit_refined_multisets(
    d: &Diagram,
    flavor: &Flavor,
    omega: &dyn CochainEval,
    opts: Options,
) -> Result<BTreeMap<Vec<usize>, WeightMultiset>> {
    let orbits = omega.quandle().orbits();
    let mut out: BTreeMap<Vec<usize>, WeightMultiset> = BTreeMap::new();
    for (c, w) in weights(d, flavor, omega, opts)? {
        out.entry(component_orbits(d, &c, &orbits)?).or_default().insert(w);
    }
    Ok(out)
}
