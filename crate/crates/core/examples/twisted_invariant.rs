//! Twisted cocycle invariants. Every multiset is fixed by scaling with α, and
//! when the quandle has a central element scaling by α - 1 kills every weight.
//! The same multiset is recovered as a shadow invariant over `Z`.

use std::sync::Arc;

use qci::algebra::{groups, CoeffGroup, ModElem, QModule, Quandle, Scalar};
use qci::cohomology::{cohomology_basis, CochainEval, DifferentialSpec, TwistTransport};
use qci::coloring::{enumerate_colorings, propagate_shadow};
use qci::corpus;
use qci::invariants::{invariant_multiset, weight_shadow, Flavor, Options, WeightMultiset};

fn main() -> qci::Result<()> {
    let cases = [
        ("conj(S3)", Quandle::conjugation(&groups::symmetric(3))?, 9, 4),
        ("R6", Quandle::dihedral(6), 8, 5),
        ("R3 + point", Quandle::disjoint_union(&Quandle::dihedral(3), &Quandle::trivial(1)), 6, 5),
    ];
    for (name, q, n, a) in cases {
        let q = Arc::new(q);
        let g = CoeffGroup::cyclic(n);
        let alpha = Scalar::int(a);
        let h = cohomology_basis(&q, &Arc::new(QModule::trivial(&q)), &g, &DifferentialSpec::twisted(alpha), 2, true)?;
        println!("{name} over Z_{n}, alpha = {a}: H^2 = {}", h.cohomology);
        let flavor = Flavor::Twisted { alpha };
        for omega in h.nontrivial_cocycles().iter().take(2) {
            for k in ["trefoil", "hopf", "hopf_reversed"] {
                let d = corpus::diagram(k).expect("bundled");
                let w = invariant_multiset(&d, &flavor, omega, Options::default())?;
                let fixed = w.scale(&g, alpha) == w;
                let killed = w.iter().all(|(x, _)| g.is_zero(&g.mul_int(a - 1, x)));
                println!("  {k:14} {w}  fixed by alpha: {fixed}, killed by alpha-1: {killed}");
            }
        }
        if let Some(omega) = h.nontrivial_cocycles().first() {
            // Shadow weights of the Z-transport with exterior 0 give the same multiset.
            let z = TwistTransport::twisted_to_shadow(omega, alpha)?;
            let d = corpus::diagram("hopf").expect("bundled");
            let ws: WeightMultiset = enumerate_colorings(&d, &q)
                .iter()
                .map(|c| weight_shadow(&d, &propagate_shadow(&d, c, z.module(), &ModElem::scalar(0))?, &z))
                .collect::<qci::Result<_>>()?;
            println!("  hopf via Z shadow  {ws}");
        }
    }
    Ok(())
}
