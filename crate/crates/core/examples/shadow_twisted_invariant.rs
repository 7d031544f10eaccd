//! Twisted shadow invariants over `R3` with the regular module, computed
//! directly and as ordinary shadow invariants over the product module `M × Z`.
//! Over `Z_9` they tell the trefoil from its mirror.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, ModElem, QModule, Quandle, Scalar};
use qci::cohomology::{cohomology_basis, DifferentialSpec};
use qci::coloring::enumerate_colorings;
use qci::corpus;
use qci::invariants::{invariant_multiset, weight_shadow_twisted_via_product, Flavor, Options, WeightMultiset};

fn main() -> qci::Result<()> {
    let q = Arc::new(Quandle::dihedral(3));
    let m = Arc::new(QModule::regular(&q));
    for (n, a) in [(9, 4), (9, 7), (9, 2)] {
        let g = CoeffGroup::cyclic(n);
        let alpha = Scalar::int(a);
        let h = cohomology_basis(&q, &m, &g, &DifferentialSpec::twisted(alpha), 2, true)?;
        println!("R3, regular module, Z_{n}, alpha = {a}: H^2 = {}", h.cohomology);
        let Some(omega) = h.nontrivial_cocycles().into_iter().next() else { continue };
        let flavor = Flavor::ShadowTwisted { exterior: ModElem::scalar(0), alpha };
        for name in ["trefoil", "trefoil_mirror", "hopf"] {
            let d = corpus::diagram(name).expect("bundled");
            let w = invariant_multiset(&d, &flavor, &omega, Options::default())?;
            let via: WeightMultiset = enumerate_colorings(&d, &q)
                .iter()
                .map(|c| weight_shadow_twisted_via_product(&d, c, &omega, &ModElem::scalar(0), alpha))
                .collect::<qci::Result<_>>()?;
            println!("  {name:15} {w}  via M x Z: {}", w == via);
        }
    }
    Ok(())
}
