//! Quandles and cocycles with non-trivial invariants on the corpus, one or
//! more per flavor.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qci::algebra::{groups, CoeffGroup, ModElem, QModule, Quandle, Scalar};
use qci::cohomology::{cohomology_basis, link_twisted_cohomology, Cochain, DifferentialSpec};
use qci::corpus;
use qci::diagram::Diagram;
use qci::invariants::Flavor;

/// The Alexander quandle on F_4 with t a primitive cube root of unity.
pub fn tetrahedral() -> Quandle {
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
    let op = (0..4).map(|a| (0..4).map(|b| mul(2, a) ^ mul(3, b)).collect()).collect();
    Quandle::from_tables(op, None).unwrap()
}

pub fn trivial_module(q: &Arc<Quandle>) -> Arc<QModule> {
    Arc::new(QModule::trivial(q))
}

fn first_nontrivial(q: &Arc<Quandle>, m: &Arc<QModule>, g: &CoeffGroup, spec: DifferentialSpec) -> Cochain {
    cohomology_basis(q, m, g, &spec, 2, true).unwrap().nontrivial_cocycles().remove(0)
}

pub struct Case {
    pub label: String,
    pub flavor: Flavor,
    pub omega: Cochain,
}

fn case(label: &str, flavor: Flavor, omega: Cochain) -> Case {
    Case { label: label.to_string(), flavor, omega }
}

/// Cocycles for every flavor, most of them non-trivial in cohomology.
pub fn cases() -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut out = Vec::new();

    let s4 = Arc::new(tetrahedral());
    out.push(case("classical S4/Z2", Flavor::Classical, first_nontrivial(&s4, &trivial_module(&s4), &CoeffGroup::cyclic(2), DifferentialSpec::quandle())));
    let t2 = Arc::new(Quandle::trivial(2));
    let chi = Cochain::from_fn(t2.clone(), trivial_module(&t2), CoeffGroup::cyclic(5), 2, |_, a| vec![(a == [0, 1]) as i64]).unwrap();
    out.push(case("classical T2/Z5", Flavor::Classical, chi));
    let r4 = Arc::new(Quandle::dihedral(4));
    let h = cohomology_basis(&r4, &trivial_module(&r4), &CoeffGroup::cyclic(3), &DifferentialSpec::quandle(), 2, true).unwrap();
    out.push(case("classical R4/Z3 random", Flavor::Classical, h.random_cocycle(&mut rng)));

    let r3 = Arc::new(Quandle::dihedral(3));
    let regular = Arc::new(QModule::regular(&r3));
    let sh = first_nontrivial(&r3, &regular, &CoeffGroup::cyclic(3), DifferentialSpec::quandle());
    for e in 0..3 {
        out.push(case(&format!("shadow R3/Z3 ext {e}"), Flavor::Shadow { exterior: ModElem::scalar(e) }, sh.clone()));
    }

    let r6 = Arc::new(Quandle::dihedral(6));
    let z8 = CoeffGroup::cyclic(8);
    out.push(case("positive R6/Z8", Flavor::Positive, first_nontrivial(&r6, &trivial_module(&r6), &z8, DifferentialSpec::positive())));
    out.push(case("positive R3/Z3", Flavor::Positive, first_nontrivial(&r3, &trivial_module(&r3), &CoeffGroup::cyclic(3), DifferentialSpec::positive())));

    let five = Scalar::int(5);
    out.push(case("twisted R6/Z8 a=5", Flavor::Twisted { alpha: five }, first_nontrivial(&r6, &trivial_module(&r6), &z8, DifferentialSpec::twisted(five))));
    let u = Arc::new(Quandle::disjoint_union(&Quandle::dihedral(3), &Quandle::trivial(1)));
    out.push(case(
        "twisted R3+T1/Z6 a=5",
        Flavor::Twisted { alpha: five },
        first_nontrivial(&u, &trivial_module(&u), &CoeffGroup::cyclic(6), DifferentialSpec::twisted(five)),
    ));
    let s3 = Arc::new(Quandle::conjugation(&groups::symmetric(3)).unwrap());
    let four = Scalar::int(4);
    out.push(case(
        "twisted conj(S3)/Z9 a=4",
        Flavor::Twisted { alpha: four },
        first_nontrivial(&s3, &trivial_module(&s3), &CoeffGroup::cyclic(9), DifferentialSpec::twisted(four)),
    ));

    let z9 = CoeffGroup::cyclic(9);
    let sht = first_nontrivial(&r3, &regular, &z9, DifferentialSpec::twisted(four));
    for e in [0, 2] {
        out.push(case(&format!("shadow-twisted R3/Z9 a=4 ext {e}"), Flavor::ShadowTwisted { exterior: ModElem::scalar(e), alpha: four }, sht.clone()));
    }

    let alphas = vec![Scalar::int(3), Scalar::int(5)];
    let lt = link_twisted_cohomology(&r6, &z8, &alphas, true).unwrap().nontrivial_cocycles().remove(0);
    out.push(case("link-twisted R6/Z8 (3,5)", Flavor::LinkTwisted { alphas }, lt));
    let alphas = vec![Scalar::int(2), Scalar::int(3)];
    let h = link_twisted_cohomology(&r4, &CoeffGroup::cyclic(5), &alphas, true).unwrap();
    out.push(case("link-twisted R4/Z5 (2,3) random", Flavor::LinkTwisted { alphas }, h.random_cocycle(&mut rng)));
    out
}

/// Every diagram in the bundled corpus: the bases and both sides of each R3 pair.
pub fn corpus_diagrams() -> Vec<(String, Diagram)> {
    let mut out = Vec::new();
    for e in corpus::ENTRIES {
        out.push((e.name.to_string(), e.diagram().unwrap()));
        let (a, b) = e.r3_pair().unwrap();
        out.push((format!("{}/r3a", e.name), a));
        out.push((format!("{}/r3b", e.name), b));
    }
    out
}
