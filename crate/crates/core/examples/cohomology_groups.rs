//! Cocycle, coboundary and cohomology groups of small quandles under the
//! differentials `α_l d_l - α_r d_r`, plus a coboundary membership query.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qci::algebra::{CoeffGroup, QModule, Quandle, Scalar};
use qci::cohomology::{cohomology_basis, link_twisted_cohomology, Cochain, DifferentialSpec};

fn main() -> qci::Result<()> {
    let g = CoeffGroup::cyclic(3);
    let specs = [("quandle", DifferentialSpec::quandle()), ("positive", DifferentialSpec::positive())];
    for (name, q) in [("R3", Quandle::dihedral(3)), ("T2", Quandle::trivial(2)), ("R4", Quandle::dihedral(4))] {
        let q = Arc::new(q);
        let m = Arc::new(QModule::trivial(&q));
        for (sname, spec) in &specs {
            let h = cohomology_basis(&q, &m, &g, spec, 2, true)?;
            println!("{name} {sname:8} Z^2 = {}, B^2 = {}, H^2 = {}", h.cocycles, h.coboundaries, h.cohomology);
        }
    }

    let q = Arc::new(Quandle::dihedral(5));
    let g5 = CoeffGroup::cyclic(5);
    let spec = DifferentialSpec::twisted(Scalar::int(2));
    let h = cohomology_basis(&q, &Arc::new(QModule::trivial(&q)), &g5, &spec, 2, true)?;
    println!("R5 twisted alpha=2 over Z_5: H^2 = {}", h.cohomology);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let theta = Cochain::random(q.clone(), Arc::new(QModule::trivial(&q)), g5.clone(), 1, true, &mut rng)?;
    let d_theta = theta.differential(&spec)?;
    println!("d(theta) is a coboundary: {}", h.is_coboundary(&d_theta)?);

    let r4 = Arc::new(Quandle::dihedral(4));
    let link = link_twisted_cohomology(&r4, &g5, &[Scalar::int(2), Scalar::int(3)], true)?;
    println!("R4 per-orbit twisted (2,3) over Z_5: H^2 = {}", link.cohomology);
    Ok(())
}
