//! Per-component twisting: one unit for each orbit of the quandle. The
//! multiset splits by the orbits the components are colored from, and equal
//! units reproduce the twisted invariant exactly.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, Quandle, Scalar};
use qci::cohomology::link_twisted_cohomology;
use qci::corpus;
use qci::invariants::{invariant_multiset, orbit_refined_multisets, Flavor, Options};

fn main() -> qci::Result<()> {
    let q = Arc::new(Quandle::dihedral(6));
    println!("orbits of R6: {:?}", q.orbits().orbits());
    let g = CoeffGroup::cyclic(8);
    for alphas in [[3, 5], [5, 5]] {
        let alphas = alphas.map(Scalar::int);
        let h = link_twisted_cohomology(&q, &g, &alphas, true)?;
        println!("alphas ({}, {}): H^2 = {}", alphas[0], alphas[1], h.cohomology);
        let Some(omega) = h.nontrivial_cocycles().into_iter().next() else { continue };
        let flavor = Flavor::LinkTwisted { alphas: alphas.to_vec() };
        for name in ["hopf", "unlink2"] {
            let d = corpus::diagram(name).expect("bundled");
            let w = invariant_multiset(&d, &flavor, &omega, Options::default())?;
            println!("  {name:8} {w}");
            for (orbits, part) in orbit_refined_multisets(&d, &flavor, &omega, Options::default())? {
                println!("    components from orbits {orbits:?}: {part}");
            }
            if alphas[0] == alphas[1] {
                let tw = invariant_multiset(&d, &Flavor::Twisted { alpha: alphas[0] }, &omega, Options::default())?;
                println!("    same bytes as twisted: {}", tw.to_json_string() == w.to_json_string());
            }
        }
    }
    Ok(())
}
