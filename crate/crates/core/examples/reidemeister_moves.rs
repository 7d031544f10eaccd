//! Reidemeister moves leave every invariant unchanged. Kinks and pokes are
//! applied to the trefoil and the classical and positive multisets compared.

use std::sync::Arc;

use qci::algebra::{CoeffGroup, QModule, Quandle};
use qci::cohomology::{cohomology_basis, DifferentialSpec};
use qci::corpus;
use qci::diagram::{r1_insert, r2_insert, Side};
use qci::invariants::{invariant_multiset, Flavor, Options};

fn main() -> qci::Result<()> {
    let d = corpus::diagram("trefoil").expect("bundled");
    let first = d.labels()[0];
    let mut moved = vec![
        ("kink +, left", r1_insert(&d, first, 1, Side::Left)?),
        ("kink -, right", r1_insert(&d, first, -1, Side::Right)?),
    ];
    let labels = d.labels().to_vec();
    if let Some(p) = labels.iter().flat_map(|&a| labels.iter().map(move |&b| (a, b))).find_map(|(a, b)| r2_insert(&d, a, b, None).ok()) {
        moved.push(("poke", p));
    }
    let entry = corpus::entry("trefoil").expect("bundled");
    let (r3a, r3b) = entry.r3_pair()?;
    moved.push(("R3 side a", r3a));
    moved.push(("R3 side b", r3b));

    let q = Arc::new(Quandle::dihedral(3));
    let m = Arc::new(QModule::trivial(&q));
    let g = CoeffGroup::cyclic(3);
    let pos = cohomology_basis(&q, &m, &g, &DifferentialSpec::positive(), 2, true)?.nontrivial_cocycles().remove(0);
    let regular = Arc::new(QModule::regular(&q));
    let sh = cohomology_basis(&q, &regular, &g, &DifferentialSpec::quandle(), 2, true)?.nontrivial_cocycles().remove(0);
    let shadow = Flavor::Shadow { exterior: regular.zero() };

    let base_pos = invariant_multiset(&d, &Flavor::Positive, &pos, Options::default())?;
    let base_sh = invariant_multiset(&d, &shadow, &sh, Options::default())?;
    println!("{:14} {:>3} crossings  positive {base_pos}  shadow {base_sh}", "trefoil", d.crossing_count());
    for (name, m) in &moved {
        let p = invariant_multiset(m, &Flavor::Positive, &pos, Options::default())?;
        let s = invariant_multiset(m, &shadow, &sh, Options::default())?;
        let same = p == base_pos && s == base_sh;
        println!("{name:14} {:>3} crossings  positive {p}  shadow {s}  unchanged: {same}", m.crossing_count());
    }
    Ok(())
}
