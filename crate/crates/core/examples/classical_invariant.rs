//! Classical cocycle invariants. Over the two-element trivial quandle the
//! weights of a two-component link record its linking number; over the
//! tetrahedral quandle a non-trivial cocycle separates the trefoil from the unknot.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, QModule, Quandle};
use qci::cohomology::{cohomology_basis, Cochain, DifferentialSpec};
use qci::corpus;
use qci::invariants::{invariant_multiset, Flavor, Options};

fn main() -> qci::Result<()> {
    let t2 = Arc::new(Quandle::trivial(2));
    let g = CoeffGroup::cyclic(5);
    // chi(a, b) = 1 exactly when (a, b) = (0, 1)
    let chi = Cochain::from_fn(t2.clone(), Arc::new(QModule::trivial(&t2)), g, 2, |_, a| vec![(a == [0, 1]) as i64])?;
    for name in ["unlink2", "hopf", "hopf_reversed"] {
        let d = corpus::diagram(name).expect("bundled");
        println!("T2 chi_(0,1)  {name:15} {}", invariant_multiset(&d, &Flavor::Classical, &chi, Options::default())?);
    }

    let s4 = Arc::new(tetrahedral()?);
    let g2 = CoeffGroup::cyclic(2);
    let h = cohomology_basis(&s4, &Arc::new(QModule::trivial(&s4)), &g2, &DifferentialSpec::quandle(), 2, true)?;
    println!("H^2(S4; Z_2) = {}", h.cohomology);
    let omega = &h.nontrivial_cocycles()[0];
    for e in corpus::ENTRIES {
        let d = e.diagram()?;
        println!("S4 {:15} {}", e.name, invariant_multiset(&d, &Flavor::Classical, omega, Options::default())?);
    }
    Ok(())
}

/// The Alexander quandle on F_4 = F_2[w]/(w^2 + w + 1) with t = w.
fn tetrahedral() -> qci::Result<Quandle> {
    let mul = |x: usize, y: usize| {
        let mut p = 0;
        for i in 0..2 {
            if y >> i & 1 == 1 {
                p ^= x << i;
            }
        }
        if p & 4 != 0 {
            p ^= 0b111;
        }
        p
    };
    let (t, one_minus_t) = (2, 3);
    let op = (0..4).map(|a| (0..4).map(|b| mul(t, a) ^ mul(one_minus_t, b)).collect()).collect();
    Quandle::from_tables(op, None)
}
