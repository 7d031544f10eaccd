//! Lazily evaluated cochains on the symbolic modules `Z`, `M × Z` and `⊕_O Z e_O`.
//!
//! A twisted cocycle `ω` becomes the shadow cochain `ω_α(m, a, b) = α^{-m} ω(a, b)`
//! on `Z`; a twisted `M`-shadow cocycle becomes `(m, k, a, b) ↦ α^{-k} ω(m, a, b)`
//! on `M × Z`; and a collection `(α_O)` gives `ω_ᾱ(v, a, b) = Π_O α_O^{-v_O} ω(a, b)`
//! on the orbit lattice.

use super::{Cochain, CochainEval};
use crate::algebra::{product_module, CoeffGroup, Elem, ModElem, QModule, Quandle, Scalar};
use crate::error::{Error, Result};

/// `(m.., k, a) ↦ α^{-k} ω(m.., a)`.
#[derive(Clone, Debug)]
pub struct TwistTransport {
    base: Cochain,
    alpha: Scalar,
    module: QModule,
    /// True when the base module is trivial and the result lives on `Z` alone.
    plain: bool,
}

impl TwistTransport {
    /// `ω_α` on the integer module, for `ω` over the trivial module.
    pub fn twisted_to_shadow(omega: &Cochain, alpha: Scalar) -> Result<Self> {
        if omega.module().size() != Some(1) {
            return Err(Error::UnsupportedCarrier("twisted cocycles live on the one-element module".into()));
        }
        Self::check_alpha(omega.coeff(), alpha)?;
        Ok(TwistTransport {
            base: omega.clone(),
            alpha,
            module: QModule::integers(omega.quandle()),
            plain: true,
        })
    }

    /// The shadow cochain on `M × Z` attached to a twisted `M`-shadow cochain.
    pub fn shadow_twisted(omega: &Cochain, alpha: Scalar) -> Result<Self> {
        Self::check_alpha(omega.coeff(), alpha)?;
        let q = omega.quandle();
        let module = product_module(&[omega.module().clone(), QModule::integers(q)])?;
        Ok(TwistTransport { base: omega.clone(), alpha, module, plain: false })
    }

    fn check_alpha(g: &CoeffGroup, alpha: Scalar) -> Result<()> {
        g.check_scalar(alpha)?;
        if !g.is_unit(alpha) {
            return Err(Error::NotAUnit(format!("{alpha} is not a unit of {g}")));
        }
        Ok(())
    }

    pub fn alpha(&self) -> Scalar {
        self.alpha
    }

    pub fn base(&self) -> &Cochain {
        &self.base
    }
}

impl CochainEval for TwistTransport {
    fn degree(&self) -> usize {
        self.base.degree()
    }

    fn coeff(&self) -> &CoeffGroup {
        self.base.coeff()
    }

    fn quandle(&self) -> &Quandle {
        self.base.quandle()
    }

    fn module(&self) -> &QModule {
        &self.module
    }

    fn eval(&self, m: &ModElem, a: &[usize]) -> Elem {
        let (rest, k) = m.0.split_at(m.0.len() - 1);
        let g = self.base.coeff();
        let s = g.pow(self.alpha, -k[0]).expect("alpha checked to be a unit");
        let inner = if self.plain { ModElem::scalar(0) } else { ModElem(rest.to_vec()) };
        g.scale(s, &self.base.eval(&inner, a))
    }
}

/// `(v, a) ↦ Π_O α_O^{-v_O} ω(a)` on the orbit lattice.
#[derive(Clone, Debug)]
pub struct LinkTransport {
    base: Cochain,
    alphas: Vec<Scalar>,
    module: QModule,
}

impl LinkTransport {
    /// `alphas[i]` is the unit attached to orbit `i` of the quandle.
    pub fn new(omega: &Cochain, alphas: &[Scalar]) -> Result<Self> {
        if omega.module().size() != Some(1) {
            return Err(Error::UnsupportedCarrier("link-twisted cocycles live on the one-element module".into()));
        }
        let q = omega.quandle();
        let orbits = q.orbits().count();
        if alphas.len() != orbits {
            return Err(Error::SizeMismatch(format!("{} scalars for {orbits} orbits", alphas.len())));
        }
        for &a in alphas {
            TwistTransport::check_alpha(omega.coeff(), a)?;
        }
        Ok(LinkTransport { base: omega.clone(), alphas: alphas.to_vec(), module: QModule::orbit_lattice(q) })
    }
}

impl CochainEval for LinkTransport {
    fn degree(&self) -> usize {
        self.base.degree()
    }

    fn coeff(&self) -> &CoeffGroup {
        self.base.coeff()
    }

    fn quandle(&self) -> &Quandle {
        self.base.quandle()
    }

    fn module(&self) -> &QModule {
        &self.module
    }

    fn eval(&self, v: &ModElem, a: &[usize]) -> Elem {
        let g = self.base.coeff();
        let mut x = self.base.eval(&ModElem::scalar(0), a);
        for (&alpha, &k) in self.alphas.iter().zip(&v.0) {
            x = g.scale(g.pow(alpha, -k).expect("checked unit"), &x);
        }
        x
    }
}
