//! Positive cocycle invariants, where each crossing is signed by the parity of
//! the region index next to it rather than by its orientation. They agree with
//! the twisted invariants at α = -1 and are symmetric under negation.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, QModule, Quandle, Scalar};
use qci::cohomology::{cohomology_basis, DifferentialSpec};
use qci::corpus;
use qci::invariants::{invariant_multiset, Flavor, Options};

fn main() -> qci::Result<()> {
    let d = corpus::diagram("figure_eight").expect("bundled");
    let idx = d.indices();
    for (x, g) in d.crossings().iter().zip(d.geometry()) {
        println!("crossing sign {:+}, source index {}, positive sign {:+}", x.sign, idx.total[g.source], g.positive_sign);
    }

    let q = Arc::new(Quandle::dihedral(6));
    let g = CoeffGroup::cyclic(8);
    let h = cohomology_basis(&q, &Arc::new(QModule::trivial(&q)), &g, &DifferentialSpec::positive(), 2, true)?;
    println!("positive H^2(R6; Z_8) = {}", h.cohomology);
    let minus_one = Flavor::Twisted { alpha: Scalar::MINUS_ONE };
    for omega in h.nontrivial_cocycles().iter().take(3) {
        for e in corpus::ENTRIES {
            let d = e.diagram()?;
            let w = invariant_multiset(&d, &Flavor::Positive, omega, Options::default())?;
            let tw = invariant_multiset(&d, &minus_one, omega, Options::default())?;
            let symmetric = w.map(|x| g.neg(x)) == w;
            println!("  {:15} {w}  same as alpha=-1: {}, symmetric: {symmetric}", e.name, w == tw);
        }
    }
    Ok(())
}
