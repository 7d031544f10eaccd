//! Cochains `M × Q^k → A`, the differentials `d_l` and `d_r`, and cocycle checks.
//!
//! ```text
//! (d_l φ)(m, a_1..a_{k+1}) = Σ_i (-1)^{i-1} φ(m ◁ a_i, a_1 ◁ a_i, .., a_{i-1} ◁ a_i, a_{i+1}, .., a_{k+1})
//! (d_r φ)(m, a_1..a_{k+1}) = Σ_i (-1)^{i-1} φ(m, a_1, .., â_i, .., a_{k+1})
//! ```
//!
//! A [`DifferentialSpec`] `(α_l, α_r)` selects the differential `α_l d_l - α_r d_r`.

mod groups;
mod link;
mod transport;

pub use groups::{cohomology_basis, Cohomology};
pub use link::{is_link_twisted_cocycle, link_twisted_cohomology, link_twisted_coboundary};
pub use transport::{LinkTransport, TwistTransport};

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffGroup, Elem, ElemJson, ModElem, ModuleJson, QModule, Quandle, Scalar};
use crate::error::{Error, Result};

/// The pair `(α_l, α_r)` of the differential `α_l d_l - α_r d_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferentialSpec {
    pub alpha_l: Scalar,
    pub alpha_r: Scalar,
}

impl DifferentialSpec {
    pub fn new(alpha_l: Scalar, alpha_r: Scalar) -> Self {
        DifferentialSpec { alpha_l, alpha_r }
    }

    /// `(1, 1)`: ordinary quandle cohomology.
    pub fn quandle() -> Self {
        Self::new(Scalar::ONE, Scalar::ONE)
    }

    /// `(1, -1)`: positive quandle cohomology.
    pub fn positive() -> Self {
        Self::new(Scalar::ONE, Scalar::MINUS_ONE)
    }

    /// `(1, α)`: α-twisted quandle cohomology.
    pub fn twisted(alpha: Scalar) -> Self {
        Self::new(Scalar::ONE, alpha)
    }

    /// Parses `l,r`, e.g. `1,-1` or `1,t`.
    pub fn parse(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `alpha_l,alpha_r`, got {s:?}")))?;
        Ok(Self::new(Scalar::parse(l)?, Scalar::parse(r)?))
    }

    /// Both scalars must be units of `coeff`.
    pub fn check(&self, coeff: &CoeffGroup) -> Result<()> {
        for s in [self.alpha_l, self.alpha_r] {
            coeff.check_scalar(s)?;
            if !coeff.is_unit(s) {
                return Err(Error::NotAUnit(format!("{s} is not a unit of {coeff}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DifferentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.alpha_l, self.alpha_r)
    }
}

/// Anything that can be evaluated like a cochain: dense tables as well as the
/// lazily evaluated cochains on symbolic modules.
pub trait CochainEval: Sync {
    fn degree(&self) -> usize;
    fn coeff(&self) -> &CoeffGroup;
    fn quandle(&self) -> &Quandle;
    fn module(&self) -> &QModule;
    fn eval(&self, m: &ModElem, a: &[usize]) -> Elem;
}

/// Which differential a term of [`for_each_term`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

/// Enumerates the terms of `d_l` and `d_r` at `(m, a)`, where `a` has `k + 1`
/// entries. Each term is `(side, sign, m', a')` with `a'` of length `k`.
pub(crate) fn for_each_term(
    q: &Quandle,
    module: &QModule,
    m: &ModElem,
    a: &[usize],
    mut f: impl FnMut(Side, i64, &ModElem, &[usize]),
) {
    let k1 = a.len();
    let mut buf = Vec::with_capacity(k1.saturating_sub(1));
    for i in 0..k1 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let ai = a[i];
        buf.clear();
        buf.extend(a[..i].iter().map(|&x| q.op(x, ai)));
        buf.extend_from_slice(&a[i + 1..]);
        f(Side::Left, sign, &module.act(m, ai, 1), &buf);
        buf.clear();
        buf.extend_from_slice(&a[..i]);
        buf.extend_from_slice(&a[i + 1..]);
        f(Side::Right, sign, m, &buf);
    }
}

/// `(c_l d_l φ + c_r d_r φ)(m, a)`.
pub(crate) fn eval_combination(phi: &dyn CochainEval, c_l: Scalar, c_r: Scalar, m: &ModElem, a: &[usize]) -> Elem {
    let g = phi.coeff();
    let mut acc = g.zero();
    for_each_term(phi.quandle(), phi.module(), m, a, |side, sign, m2, a2| {
        let c = match side {
            Side::Left => c_l,
            Side::Right => c_r,
        };
        let v = g.scale(Scalar { coeff: c.coeff * sign, shift: c.shift }, &phi.eval(m2, a2));
        g.add_assign(&mut acc, &v);
    });
    acc
}

/// `(α_l d_l φ - α_r d_r φ)(m, a)` for any evaluable cochain.
pub fn eval_differential(spec: &DifferentialSpec, phi: &dyn CochainEval, m: &ModElem, a: &[usize]) -> Elem {
    let neg_r = Scalar { coeff: -spec.alpha_r.coeff, shift: spec.alpha_r.shift };
    eval_combination(phi, spec.alpha_l, neg_r, m, a)
}

/// A dense cochain `M × Q^k → A` over a finite module.
///
/// Values are stored in lexicographic order of `(m, a_1, .., a_k)` with `m`
/// the module index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    quandle: Arc<Quandle>,
    module: Arc<QModule>,
    coeff: CoeffGroup,
    degree: usize,
    values: Vec<Elem>,
}

/// Decodes a flat tuple index into `(module index, quandle tuple)`.
pub(crate) fn decode(idx: usize, n: usize, k: usize, a: &mut Vec<usize>) -> usize {
    a.clear();
    a.resize(k, 0);
    let mut rest = idx;
    for slot in a.iter_mut().rev() {
        *slot = rest % n;
        rest /= n;
    }
    rest
}

pub(crate) fn encode(m: usize, a: &[usize], n: usize) -> usize {
    a.iter().fold(m, |acc, &x| acc * n + x)
}

/// True if some adjacent pair `a_i = a_{i+1}`.
pub fn is_degenerate(a: &[usize]) -> bool {
    a.windows(2).any(|w| w[0] == w[1])
}

impl Cochain {
    pub fn zero(quandle: Arc<Quandle>, module: Arc<QModule>, coeff: CoeffGroup, degree: usize) -> Result<Self> {
        if module.quandle_size() != quandle.size() {
            return Err(Error::SizeMismatch("module and quandle sizes differ".into()));
        }
        let msize = module
            .size()
            .ok_or_else(|| Error::UnsupportedCarrier("dense cochains need a finite module".into()))?;
        let len = msize
            .checked_mul(quandle.size().checked_pow(degree as u32).ok_or(Error::Overflow("cochain size"))?)
            .ok_or(Error::Overflow("cochain size"))?;
        let zero = coeff.zero();
        Ok(Cochain { quandle, module, coeff, degree, values: vec![zero; len] })
    }

    /// A cochain over the one-element module, i.e. a map `Q^k → A`.
    pub fn trivial_module(quandle: Arc<Quandle>, coeff: CoeffGroup, degree: usize) -> Self {
        let m = Arc::new(QModule::trivial(&quandle));
        Self::zero(quandle, m, coeff, degree).expect("trivial module is finite")
    }

    /// Fills the table from `f(m, a)`; values are reduced into the group.
    pub fn from_fn(
        quandle: Arc<Quandle>,
        module: Arc<QModule>,
        coeff: CoeffGroup,
        degree: usize,
        mut f: impl FnMut(&ModElem, &[usize]) -> Vec<i64>,
    ) -> Result<Self> {
        let mut c = Self::zero(quandle, module, coeff, degree)?;
        let mut a = Vec::new();
        for idx in 0..c.values.len() {
            let mi = decode(idx, c.quandle.size(), degree, &mut a);
            let m = c.module.elem_at(mi).expect("finite");
            c.values[idx] = c.coeff.reduce(&f(&m, &a));
        }
        Ok(c)
    }

    /// Uniformly random values; with `quandle_flag` degenerate tuples stay zero.
    pub fn random(
        quandle: Arc<Quandle>,
        module: Arc<QModule>,
        coeff: CoeffGroup,
        degree: usize,
        quandle_flag: bool,
        rng: &mut impl Rng,
    ) -> Result<Self> {
        let moduli = coeff.moduli().to_vec();
        Self::from_fn(quandle, module, coeff, degree, |_, a| {
            if quandle_flag && is_degenerate(a) {
                vec![0; moduli.len()]
            } else {
                moduli.iter().map(|&n| if n == 0 { rng.gen_range(-5..=5) } else { rng.gen_range(0..n as i64) }).collect()
            }
        })
    }

    pub fn quandle_arc(&self) -> &Arc<Quandle> {
        &self.quandle
    }

    pub fn module_arc(&self) -> &Arc<QModule> {
        &self.module
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index(&self, m: usize, a: &[usize]) -> usize {
        debug_assert_eq!(a.len(), self.degree);
        encode(m, a, self.quandle.size())
    }

    /// Value at module index `m`.
    pub fn get(&self, m: usize, a: &[usize]) -> &Elem {
        &self.values[self.index(m, a)]
    }

    pub fn set(&mut self, m: usize, a: &[usize], v: &Elem) {
        let i = self.index(m, a);
        self.values[i] = self.coeff.reduce(&v.0);
    }

    pub fn set_flat(&mut self, idx: usize, v: &Elem) {
        self.values[idx] = self.coeff.reduce(&v.0);
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.coeff.is_zero(v))
    }

    /// True if the cochain vanishes on every degenerate tuple.
    pub fn is_degenerate_free(&self) -> bool {
        self.first_degenerate_nonzero().is_none()
    }

    fn first_degenerate_nonzero(&self) -> Option<(usize, Vec<usize>)> {
        let mut a = Vec::new();
        for (idx, v) in self.values.iter().enumerate() {
            let m = decode(idx, self.quandle.size(), self.degree, &mut a);
            if is_degenerate(&a) && !self.coeff.is_zero(v) {
                return Some((m, a));
            }
        }
        None
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree || self.coeff != other.coeff || self.values.len() != other.values.len() {
            return Err(Error::CoefficientMismatch("cochains of different shape".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (x, y) in out.values.iter_mut().zip(&other.values) {
            self.coeff.add_assign(x, y);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (x, y) in out.values.iter_mut().zip(&other.values) {
            *x = self.coeff.sub(x, y);
        }
        Ok(out)
    }

    pub fn scale(&self, s: Scalar) -> Result<Cochain> {
        self.coeff.check_scalar(s)?;
        let mut out = self.clone();
        for x in &mut out.values {
            *x = self.coeff.scale(s, x);
        }
        Ok(out)
    }

    fn combination(&self, c_l: Scalar, c_r: Scalar) -> Result<Cochain> {
        self.coeff.check_scalar(c_l)?;
        self.coeff.check_scalar(c_r)?;
        let mut out = Cochain::zero(self.quandle.clone(), self.module.clone(), self.coeff.clone(), self.degree + 1)?;
        let mut a = Vec::new();
        for idx in 0..out.values.len() {
            let mi = decode(idx, self.quandle.size(), self.degree + 1, &mut a);
            let m = self.module.elem_at(mi).expect("finite");
            out.values[idx] = eval_combination(self, c_l, c_r, &m, &a);
        }
        Ok(out)
    }

    /// `d_l φ`.
    pub fn d_left(&self) -> Result<Cochain> {
        self.combination(Scalar::ONE, Scalar::int(0))
    }

    /// `d_r φ`.
    pub fn d_right(&self) -> Result<Cochain> {
        self.combination(Scalar::int(0), Scalar::ONE)
    }

    /// `α_l d_l φ - α_r d_r φ`.
    pub fn differential(&self, spec: &DifferentialSpec) -> Result<Cochain> {
        spec.check(&self.coeff)?;
        self.combination(spec.alpha_l, Scalar { coeff: -spec.alpha_r.coeff, shift: spec.alpha_r.shift })
    }

    pub fn to_json(&self) -> CochainJson {
        CochainJson {
            v: 1,
            degree: self.degree,
            module: self.module.to_json(),
            coeff: self.coeff.clone(),
            values: self.values.iter().map(Elem::to_wire).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("cochain serializes")
    }

    pub fn from_json(j: CochainJson, quandle: Arc<Quandle>) -> Result<Self> {
        let module = Arc::new(QModule::from_json(j.module, &quandle)?);
        let mut c = Cochain::zero(quandle, module, j.coeff, j.degree)?;
        if j.values.len() != c.values.len() {
            return Err(Error::SizeMismatch(format!(
                "cochain has {} values, expected {}",
                j.values.len(),
                c.values.len()
            )));
        }
        for (slot, w) in c.values.iter_mut().zip(j.values) {
            *slot = Elem::from_wire(w, &c.coeff)?;
        }
        Ok(c)
    }

    pub fn from_json_str(s: &str, quandle: Arc<Quandle>) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?, quandle)
    }
}

impl CochainEval for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn coeff(&self) -> &CoeffGroup {
        &self.coeff
    }

    fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    fn module(&self) -> &QModule {
        &self.module
    }

    fn eval(&self, m: &ModElem, a: &[usize]) -> Elem {
        let mi = self.module.index_of(m).expect("module element out of range");
        self.get(mi, a).clone()
    }
}

/// Wire format for cochains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    #[serde(default = "one")]
    pub v: u32,
    pub degree: usize,
    pub module: ModuleJson,
    pub coeff: CoeffGroup,
    pub values: Vec<ElemJson>,
}

fn one() -> u32 {
    1
}

/// Where a cocycle check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleWitness {
    pub module_elem: ModElem,
    pub tuple: Vec<usize>,
    pub value: Elem,
    /// True if the failure is a non-zero value on a degenerate tuple.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    pub holds: bool,
    pub witness: Option<CocycleWitness>,
}

impl CocycleReport {
    fn pass() -> Self {
        CocycleReport { holds: true, witness: None }
    }

    fn fail(w: CocycleWitness) -> Self {
        CocycleReport { holds: false, witness: Some(w) }
    }
}

/// Checks `differential(spec, φ) = 0` and, with `quandle_flag`, that `φ`
/// vanishes on degenerate tuples. Degeneracy is checked first.
pub fn is_cocycle(spec: &DifferentialSpec, phi: &Cochain, quandle_flag: bool) -> Result<CocycleReport> {
    spec.check(&phi.coeff)?;
    if quandle_flag {
        if let Some((m, a)) = phi.first_degenerate_nonzero() {
            let value = phi.get(m, &a).clone();
            return Ok(CocycleReport::fail(CocycleWitness {
                module_elem: phi.module.elem_at(m).unwrap(),
                tuple: a,
                value,
                degenerate: true,
            }));
        }
    }
    let d = phi.differential(spec)?;
    let mut a = Vec::new();
    for (idx, v) in d.values.iter().enumerate() {
        if !d.coeff.is_zero(v) {
            let m = decode(idx, d.quandle.size(), d.degree, &mut a);
            return Ok(CocycleReport::fail(CocycleWitness {
                module_elem: d.module.elem_at(m).unwrap(),
                tuple: a,
                value: v.clone(),
                degenerate: false,
            }));
        }
    }
    Ok(CocycleReport::pass())
}

/// All quandle tuples of length `k` in lexicographic order.
pub(crate) fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |idx| {
        let mut a = Vec::new();
        decode(idx, n, k, &mut a);
        a
    })
}

/// The cocycle check for an evaluable cochain, on `module.sample_elements(radius)`.
///
/// For finite modules this is exhaustive; for symbolic modules it checks a
/// window of coordinates.
pub fn is_cocycle_on_window(
    spec: &DifferentialSpec,
    phi: &dyn CochainEval,
    quandle_flag: bool,
    radius: i64,
) -> Result<CocycleReport> {
    spec.check(phi.coeff())?;
    let n = phi.quandle().size();
    let k = phi.degree();
    let g = phi.coeff();
    for m in phi.module().sample_elements(radius) {
        if quandle_flag {
            for a in tuples(n, k).filter(|a| is_degenerate(a)) {
                let value = phi.eval(&m, &a);
                if !g.is_zero(&value) {
                    return Ok(CocycleReport::fail(CocycleWitness { module_elem: m, tuple: a, value, degenerate: true }));
                }
            }
        }
        for a in tuples(n, k + 1) {
            let value = eval_differential(spec, phi, &m, &a);
            if !g.is_zero(&value) {
                return Ok(CocycleReport::fail(CocycleWitness {
                    module_elem: m.clone(),
                    tuple: a,
                    value,
                    degenerate: false,
                }));
            }
        }
    }
    Ok(CocycleReport::pass())
}
