//! Cocycle, coboundary and cohomology groups by exact linear algebra.
//!
//! The coefficient group is split into blocks: one per cyclic summand, or a
//! single `Z_n^e` block in cyclotomic mode where `t` acts by shifting. Each
//! block is a module over `Z_n` (or `Z`), so kernels, images and quotients
//! come from [`crate::linalg`].

use std::sync::Arc;

use rand::Rng;

use super::{decode, encode, for_each_term, is_degenerate, Cochain, DifferentialSpec, Side};
use crate::algebra::{CoeffGroup, ModElem, QModule, Quandle, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{image, kernel, quotient, GroupStructure, Lattice, Matrix};

/// Emits `(m', a', scalar)` terms of a linear operator at an output coordinate.
pub(crate) type TermFn<'a> = dyn Fn(&ModElem, &[usize], &mut dyn FnMut(&ModElem, &[usize], Scalar)) + Sync + 'a;

#[derive(Clone, Debug)]
enum BlockKind {
    Summand(usize),
    Cyclotomic(usize),
}

#[derive(Clone, Debug)]
struct Block {
    kind: BlockKind,
    modulus: u64,
    kernel: Lattice,
    image: Lattice,
}

impl Block {
    fn width(&self) -> usize {
        match self.kind {
            BlockKind::Summand(_) => 1,
            BlockKind::Cyclotomic(e) => e,
        }
    }
}

/// Coordinates of a cochain degree taking part in the computation.
#[derive(Clone, Debug)]
struct Support {
    flat: Vec<usize>,
    pos: Vec<usize>,
}

impl Support {
    fn new(msize: usize, n: usize, k: usize, quandle_flag: bool) -> Self {
        let total = msize * n.pow(k as u32);
        let mut a = Vec::new();
        let mut flat = Vec::new();
        let mut pos = vec![usize::MAX; total];
        for idx in 0..total {
            decode(idx, n, k, &mut a);
            if !(quandle_flag && is_degenerate(&a)) {
                pos[idx] = flat.len();
                flat.push(idx);
            }
        }
        Support { flat, pos }
    }
}

fn blocks_of(coeff: &CoeffGroup) -> Vec<(BlockKind, u64)> {
    if coeff.is_cyclotomic() {
        vec![(BlockKind::Cyclotomic(coeff.rank()), coeff.moduli()[0])]
    } else {
        coeff.moduli().iter().enumerate().map(|(i, &n)| (BlockKind::Summand(i), n)).collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn build_matrix(
    q: &Quandle,
    module: &QModule,
    k_in: usize,
    sin: &Support,
    sout: &Support,
    terms: &TermFn<'_>,
    kind: &BlockKind,
    modulus: u64,
) -> Result<Matrix> {
    let n = q.size();
    let w = match kind {
        BlockKind::Summand(_) => 1,
        BlockKind::Cyclotomic(e) => *e,
    };
    let mut mat = Matrix::zeros(sout.flat.len() * w, sin.flat.len() * w);
    let mut a = Vec::new();
    let mut err = None;
    for (row, &idx) in sout.flat.iter().enumerate() {
        let mi = decode(idx, n, k_in + 1, &mut a);
        let m = module.elem_at(mi).expect("finite module");
        terms(&m, &a, &mut |m2, a2, s| {
            let Some(mi2) = module.index_of(m2) else {
                err = Some(Error::Inconsistent("term left the module".into()));
                return;
            };
            let col = sin.pos[encode(mi2, a2, n)];
            if col == usize::MAX {
                return;
            }
            match kind {
                BlockKind::Summand(_) => {
                    if s.shift != 0 {
                        err = Some(Error::CoefficientMismatch("t-scalar outside cyclotomic mode".into()));
                    }
                    mat.add_to(row, col, s.coeff, modulus);
                }
                BlockKind::Cyclotomic(e) => {
                    for p in 0..*e {
                        let tp = (p as i64 + s.shift).rem_euclid(*e as i64) as usize;
                        mat.add_to(row * e + tp, col * e + p, s.coeff, modulus);
                    }
                }
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(mat),
    }
}

/// Cocycles, coboundaries and cohomology in one degree.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub quandle_flag: bool,
    pub cocycles: GroupStructure,
    pub coboundaries: GroupStructure,
    pub cohomology: GroupStructure,
    cocycle_basis: Vec<Cochain>,
    coboundary_basis: Vec<Cochain>,
    blocks: Vec<Block>,
    support: Support,
    template: Cochain,
}

impl Cohomology {
    /// Generators of the cocycle group, in echelon order.
    pub fn cocycle_basis(&self) -> &[Cochain] {
        &self.cocycle_basis
    }

    /// Generators of the coboundary group, in echelon order.
    pub fn coboundary_basis(&self) -> &[Cochain] {
        &self.coboundary_basis
    }

    /// Cocycle generators that are not coboundaries.
    pub fn nontrivial_cocycles(&self) -> Vec<Cochain> {
        self.cocycle_basis.iter().filter(|c| !self.is_coboundary(c).unwrap_or(true)).cloned().collect()
    }

    fn block_vector(&self, b: &Block, phi: &Cochain) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.support.flat.len() * b.width());
        for &idx in &self.support.flat {
            let x = &phi.values()[idx];
            match b.kind {
                BlockKind::Summand(i) => v.push(x.0[i]),
                BlockKind::Cyclotomic(_) => v.extend_from_slice(&x.0),
            }
        }
        v
    }

    fn check_shape(&self, phi: &Cochain) -> Result<()> {
        if phi.degree != self.template.degree || phi.coeff != self.template.coeff || phi.len() != self.template.len() {
            return Err(Error::CoefficientMismatch("cochain does not match the complex".into()));
        }
        Ok(())
    }

    fn outside_support(&self, phi: &Cochain) -> bool {
        phi.values()
            .iter()
            .enumerate()
            .any(|(i, v)| self.support.pos[i] == usize::MAX && !phi.coeff.is_zero(v))
    }

    /// True if `φ` lies in the span of the coboundary generators.
    pub fn is_coboundary(&self, phi: &Cochain) -> Result<bool> {
        self.check_shape(phi)?;
        if self.outside_support(phi) {
            return Ok(false);
        }
        for b in &self.blocks {
            if !b.image.contains(&self.block_vector(b, phi))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True if `φ` lies in the cocycle group.
    pub fn is_cocycle(&self, phi: &Cochain) -> Result<bool> {
        self.check_shape(phi)?;
        if self.outside_support(phi) {
            return Ok(false);
        }
        for b in &self.blocks {
            if !b.kernel.contains(&self.block_vector(b, phi))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn combine(&self, basis: &[Cochain], rng: &mut impl Rng) -> Cochain {
        let g = &self.template.coeff;
        let e = g.exponent() as i64;
        let mut acc = self.template.clone();
        for c in basis {
            let k = if e == 0 { rng.gen_range(-3..=3) } else { rng.gen_range(0..e) };
            acc = acc.add(&c.scale(Scalar::int(k)).expect("integer scalar")).expect("same shape");
        }
        acc
    }

    /// A random element of the cocycle group.
    pub fn random_cocycle(&self, rng: &mut impl Rng) -> Cochain {
        self.combine(&self.cocycle_basis, rng)
    }

    /// A random element of the coboundary group.
    pub fn random_coboundary(&self, rng: &mut impl Rng) -> Cochain {
        self.combine(&self.coboundary_basis, rng)
    }
}

/// Computes the groups in `degree` for an operator pair given by term
/// functions: `prev` maps degree `k - 1` to `k`, `next` maps `k` to `k + 1`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn compute(
    q: &Arc<Quandle>,
    module: &Arc<QModule>,
    coeff: &CoeffGroup,
    degree: usize,
    quandle_flag: bool,
    prev: &TermFn<'_>,
    next: &TermFn<'_>,
) -> Result<Cohomology> {
    if !(1..=3).contains(&degree) {
        return Err(Error::InvalidDegree(format!("cohomology is computed in degrees 1 to 3, not {degree}")));
    }
    let msize = module
        .size()
        .ok_or_else(|| Error::UnsupportedCarrier("cohomology needs a finite module".into()))?;
    let n = q.size();
    let s_prev = Support::new(msize, n, degree - 1, quandle_flag);
    let s_k = Support::new(msize, n, degree, quandle_flag);
    let s_next = Support::new(msize, n, degree + 1, quandle_flag);
    let template = Cochain::zero(q.clone(), module.clone(), coeff.clone(), degree)?;

    let mut blocks = Vec::new();
    let (mut z, mut b, mut h) = (GroupStructure::trivial(), GroupStructure::trivial(), GroupStructure::trivial());
    for (kind, modulus) in blocks_of(coeff) {
        let d_prev = build_matrix(q, module, degree - 1, &s_prev, &s_k, prev, &kind, modulus)?;
        let d_next = build_matrix(q, module, degree, &s_k, &s_next, next, &kind, modulus)?;
        let ker = kernel(&d_next, modulus)?;
        let im = image(&d_prev, modulus)?;
        z = z.direct_sum(&ker.structure()?);
        b = b.direct_sum(&im.structure()?);
        h = h.direct_sum(&quotient(&ker, &im)?);
        blocks.push(Block { kind, modulus, kernel: ker, image: im });
    }

    let to_cochain = |blk: &Block, v: &[i64]| -> Cochain {
        let mut c = template.clone();
        let w = blk.width();
        for (j, &idx) in s_k.flat.iter().enumerate() {
            let mut e = coeff.zero();
            match blk.kind {
                BlockKind::Summand(i) => e.0[i] = v[j],
                BlockKind::Cyclotomic(_) => e.0.copy_from_slice(&v[j * w..(j + 1) * w]),
            }
            c.set_flat(idx, &e);
        }
        c
    };
    let mut cocycle_basis = Vec::new();
    let mut coboundary_basis = Vec::new();
    for blk in &blocks {
        cocycle_basis.extend(blk.kernel.generators().iter().map(|v| to_cochain(blk, v)));
        coboundary_basis.extend(blk.image.generators().iter().map(|v| to_cochain(blk, v)));
    }
    debug_assert!(blocks.iter().all(|b| b.modulus == b.kernel.modulus()));

    Ok(Cohomology {
        degree,
        quandle_flag,
        cocycles: z,
        coboundaries: b,
        cohomology: h,
        cocycle_basis,
        coboundary_basis,
        blocks,
        support: s_k,
        template,
    })
}

pub(crate) fn two_term_terms<'a>(q: &'a Quandle, module: &'a QModule, c_l: Scalar, c_r: Scalar) -> Box<TermFn<'a>> {
    Box::new(move |m, a, emit| {
        for_each_term(q, module, m, a, |side, sign, m2, a2| {
            let c = match side {
                Side::Left => c_l,
                Side::Right => c_r,
            };
            emit(m2, a2, Scalar { coeff: c.coeff * sign, shift: c.shift });
        });
    })
}

/// Cocycles, coboundaries and cohomology of `α_l d_l - α_r d_r` in `degree`;
/// with `quandle_flag` the computation runs on the subcomplex of cochains
/// vanishing on degenerate tuples.
pub fn cohomology_basis(
    q: &Arc<Quandle>,
    module: &Arc<QModule>,
    coeff: &CoeffGroup,
    spec: &DifferentialSpec,
    degree: usize,
    quandle_flag: bool,
) -> Result<Cohomology> {
    spec.check(coeff)?;
    let c_r = Scalar { coeff: -spec.alpha_r.coeff, shift: spec.alpha_r.shift };
    let terms = two_term_terms(q, module, spec.alpha_l, c_r);
    compute(q, module, coeff, degree, quandle_flag, &*terms, &*terms)
}
