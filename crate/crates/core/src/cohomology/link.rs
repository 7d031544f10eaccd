//! Cocycles twisted by one unit `α_O` per quandle orbit.
//!
//! The condition on `ω: Q × Q → A` is
//!
//! ```text
//! α_{O(c)}^{-1} ω(a◁c, b◁c) - ω(a, b) - α_{O(b)}^{-1} ω(a◁b, c) + ω(a, c) + (α_{O(a)}^{-1} - 1) ω(b, c) = 0
//! ```
//!
//! and the matching coboundary of `θ: Q → A` is
//! `θ(a) - θ(b) + α_{O(a)}^{-1} θ(b) - α_{O(b)}^{-1} θ(a◁b)`.
//! Both are what the shadow conditions on the orbit lattice reduce to at `0`.

use std::sync::Arc;

use super::groups::{compute, TermFn};
use super::{tuples, Cochain, CochainEval, CocycleReport, CocycleWitness, Cohomology};
use crate::algebra::{CoeffGroup, ModElem, QModule, Quandle, Scalar};
use crate::error::{Error, Result};

fn inverses(q: &Quandle, coeff: &CoeffGroup, alphas: &[Scalar]) -> Result<Vec<Scalar>> {
    let orbits = q.orbits().count();
    if alphas.len() != orbits {
        return Err(Error::SizeMismatch(format!("{} scalars for {orbits} orbits", alphas.len())));
    }
    alphas.iter().map(|&a| coeff.inverse(a)).collect()
}

fn neg(s: Scalar) -> Scalar {
    Scalar { coeff: -s.coeff, shift: s.shift }
}

fn coboundary_terms<'a>(q: &'a Quandle, inv: &'a [Scalar]) -> Box<TermFn<'a>> {
    let orbits = q.orbits();
    Box::new(move |m, t, emit| {
        let (a, b) = (t[0], t[1]);
        emit(m, &[a], Scalar::ONE);
        emit(m, &[b], Scalar::MINUS_ONE);
        emit(m, &[b], inv[orbits.orbit_of(a)]);
        emit(m, &[q.op(a, b)], neg(inv[orbits.orbit_of(b)]));
    })
}

fn cocycle_terms<'a>(q: &'a Quandle, inv: &'a [Scalar]) -> Box<TermFn<'a>> {
    let orbits = q.orbits();
    Box::new(move |m, t, emit| {
        let (a, b, c) = (t[0], t[1], t[2]);
        emit(m, &[q.op(a, c), q.op(b, c)], inv[orbits.orbit_of(c)]);
        emit(m, &[a, b], Scalar::MINUS_ONE);
        emit(m, &[q.op(a, b), c], neg(inv[orbits.orbit_of(b)]));
        emit(m, &[a, c], Scalar::ONE);
        emit(m, &[b, c], inv[orbits.orbit_of(a)]);
        emit(m, &[b, c], Scalar::MINUS_ONE);
    })
}

fn apply(terms: &TermFn<'_>, phi: &dyn CochainEval, m: &ModElem, a: &[usize]) -> crate::algebra::Elem {
    let g = phi.coeff();
    let mut acc = g.zero();
    terms(m, a, &mut |m2, a2, s| {
        let v = g.scale(s, &phi.eval(m2, a2));
        g.add_assign(&mut acc, &v);
    });
    acc
}

fn require_trivial(phi: &dyn CochainEval, degree: usize) -> Result<()> {
    if phi.module().size() != Some(1) {
        return Err(Error::UnsupportedCarrier("link-twisted cochains live on the one-element module".into()));
    }
    if phi.degree() != degree {
        return Err(Error::InvalidDegree(format!("expected a {degree}-cochain, got degree {}", phi.degree())));
    }
    Ok(())
}

/// The link-twisted coboundary of a 1-cochain `θ`.
pub fn link_twisted_coboundary(theta: &Cochain, alphas: &[Scalar]) -> Result<Cochain> {
    require_trivial(theta, 1)?;
    let q = theta.quandle_arc().clone();
    let inv = inverses(&q, theta.coeff(), alphas)?;
    let terms = coboundary_terms(&q, &inv);
    let zero = ModElem::scalar(0);
    Cochain::from_fn(q.clone(), theta.module_arc().clone(), theta.coeff().clone(), 2, |_, a| {
        apply(&*terms, theta, &zero, a).0
    })
}

/// Checks the link-twisted cocycle condition triple by triple, and with
/// `quandle_flag` that `ω(a, a) = 0`.
pub fn is_link_twisted_cocycle(omega: &dyn CochainEval, alphas: &[Scalar], quandle_flag: bool) -> Result<CocycleReport> {
    require_trivial(omega, 2)?;
    let q = omega.quandle();
    let g = omega.coeff();
    let inv = inverses(q, g, alphas)?;
    let zero = ModElem::scalar(0);
    if quandle_flag {
        for a in 0..q.size() {
            let value = omega.eval(&zero, &[a, a]);
            if !g.is_zero(&value) {
                return Ok(CocycleReport::fail(CocycleWitness {
                    module_elem: zero,
                    tuple: vec![a, a],
                    value,
                    degenerate: true,
                }));
            }
        }
    }
    let terms = cocycle_terms(q, &inv);
    for t in tuples(q.size(), 3) {
        let value = apply(&*terms, omega, &zero, &t);
        if !g.is_zero(&value) {
            return Ok(CocycleReport::fail(CocycleWitness { module_elem: zero, tuple: t, value, degenerate: false }));
        }
    }
    Ok(CocycleReport::pass())
}

/// Link-twisted cocycles and coboundaries in degree 2.
pub fn link_twisted_cohomology(
    q: &Arc<Quandle>,
    coeff: &CoeffGroup,
    alphas: &[Scalar],
    quandle_flag: bool,
) -> Result<Cohomology> {
    let inv = inverses(q, coeff, alphas)?;
    let module = Arc::new(QModule::trivial(q));
    let prev = coboundary_terms(q, &inv);
    let next = cocycle_terms(q, &inv);
    compute(q, &module, coeff, 2, quandle_flag, &*prev, &*next)
}
