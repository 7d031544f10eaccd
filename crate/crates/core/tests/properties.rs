mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use qci::algebra::{check_quandle, AxiomReport, CoeffGroup, Elem, Quandle};
use qci::cohomology::CochainEval;
use qci::coloring::enumerate_colorings;
use qci::diagram::{braid_closure, r1_insert, Diagram, Side};
use qci::invariants::{invariant_multiset, Options, WeightMultiset};

use common::fixtures::{cases, Case};
use common::{oracle, oracle_coloring_count, poke};

fn fixtures() -> &'static Vec<Case> {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(cases)
}

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=3).prop_flat_map(|s| {
        let letter = (1..s as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(s), prop::collection::vec(letter, 0..=5))
    })
}

fn closure((s, w): &(usize, Vec<i32>)) -> Diagram {
    braid_closure(*s, w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coloring_count_matches_brute_force(b in braid(), n in 2usize..=4) {
        let d = closure(&b);
        let q = Quandle::dihedral(n);
        prop_assert_eq!(enumerate_colorings(&d, &q).len(), oracle_coloring_count(&d, &q));
    }

    #[test]
    fn region_indices_match_bfs(b in braid()) {
        let d = closure(&b);
        prop_assert_eq!(&d.indices().total, &oracle::region_indices(&d));
    }

    #[test]
    fn invariants_survive_kinks(b in braid(), pick in any::<prop::sample::Index>(), sign in prop_oneof![Just(1i8), Just(-1i8)], left in any::<bool>()) {
        let d = closure(&b);
        let label = d.labels()[pick.index(d.labels().len())];
        let side = if left { Side::Left } else { Side::Right };
        let k = r1_insert(&d, label, sign, side).unwrap();
        for case in fixtures() {
            let before = invariant_multiset(&d, &case.flavor, &case.omega, Options::default()).unwrap();
            let after = invariant_multiset(&k, &case.flavor, &case.omega, Options::default()).unwrap();
            prop_assert_eq!(before, after, "{}", case.label);
        }
    }

    #[test]
    fn invariants_survive_pokes(b in braid()) {
        let d = closure(&b);
        if let Some(p) = poke(&d) {
            for case in fixtures() {
                let before = invariant_multiset(&d, &case.flavor, &case.omega, Options::default()).unwrap();
                let after = invariant_multiset(&p, &case.flavor, &case.omega, Options::default()).unwrap();
                prop_assert_eq!(before, after, "{}", case.label);
            }
        }
    }

    #[test]
    fn multiset_total_is_coloring_count(b in braid()) {
        let d = closure(&b);
        for case in fixtures() {
            let w = invariant_multiset(&d, &case.flavor, &case.omega, Options::default()).unwrap();
            prop_assert_eq!(w.total() as usize, enumerate_colorings(&d, case.omega.quandle()).len());
        }
    }

    #[test]
    fn diagram_json_round_trips(b in braid()) {
        let d = closure(&b);
        let again = Diagram::from_json_str(&d.to_json_string()).unwrap();
        prop_assert_eq!(again.to_json_string(), d.to_json_string());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn axiom_check_agrees_with_oracle(n in 1usize..=4, cells in prop::collection::vec(0usize..4, 16)) {
        let op: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| cells[a * 4 + b] % n).collect()).collect();
        let want = oracle::first_violation(&op);
        match check_quandle(&op, None).unwrap() {
            AxiomReport::Pass => prop_assert!(want.is_none()),
            AxiomReport::Fail(v) => prop_assert_eq!(Some((v.axiom, v.witness)), want),
        }
    }

    #[test]
    fn multiset_json_round_trips(n in 2u64..12, xs in prop::collection::vec((0i64..12, 1u64..5), 0..6)) {
        let g = CoeffGroup::cyclic(n);
        let mut w = WeightMultiset::new();
        for (x, k) in xs {
            w.insert_n(Elem(vec![x % n as i64]), k);
        }
        let back = WeightMultiset::from_json_str(&w.to_json_string(), &g).unwrap();
        prop_assert_eq!(back, w);
    }
}

#[test]
fn fixtures_are_cocycles() {
    for case in fixtures() {
        let d = braid_closure(2, &[1, 1]).unwrap();
        invariant_multiset(&d, &case.flavor, &case.omega, Options::default()).unwrap_or_else(|e| panic!("{}: {e}", case.label));
    }
}
