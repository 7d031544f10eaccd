//! Shadow cocycle invariants over `R3` with coefficients in `Z_3`, regions
//! colored by the regular module. These separate the trefoil from its mirror.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, ModElem, QModule, Quandle};
use qci::cohomology::{cohomology_basis, DifferentialSpec};
use qci::corpus;
use qci::invariants::{invariant_multiset, Flavor, Options};

fn main() -> qci::Result<()> {
    let q = Arc::new(Quandle::dihedral(3));
    let m = Arc::new(QModule::regular(&q));
    let g = CoeffGroup::cyclic(3);
    let h = cohomology_basis(&q, &m, &g, &DifferentialSpec::quandle(), 2, true)?;
    println!("H^2(R3, regular module; Z_3) = {}", h.cohomology);
    for (i, omega) in h.nontrivial_cocycles().iter().enumerate() {
        for ext in 0..3 {
            let flavor = Flavor::Shadow { exterior: ModElem::scalar(ext) };
            for name in ["unknot", "trefoil", "trefoil_mirror", "figure_eight"] {
                let d = corpus::diagram(name).expect("bundled");
                println!("cocycle {i}, exterior {ext}: {name:15} {}", invariant_multiset(&d, &flavor, omega, Options::default())?);
            }
        }
    }
    Ok(())
}
