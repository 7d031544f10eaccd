use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn unknot() -> Diagram {
    braid_closure(1, &[]).unwrap()
}

fn trefoil() -> Diagram {
    braid_closure(2, &[1, 1, 1]).unwrap()
}

fn figure_eight() -> Diagram {
    braid_closure(3, &[1, -2, 1, -2]).unwrap()
}

fn hopf() -> Diagram {
    braid_closure(2, &[1, 1]).unwrap()
}

fn unlink() -> Diagram {
    braid_closure(2, &[]).unwrap()
}

fn assert_sane(d: &Diagram) {
    let idx = d.indices();
    let shades = d.checkerboard();
    for a in 0..d.semiarc_count() {
        let (l, r) = d.sides(a);
        assert_ne!(shades[l], shades[r]);
        assert_eq!(idx.total[l], idx.total[r] + 1);
    }
    for (r, per) in idx.per_component.iter().enumerate() {
        assert_eq!(per.iter().sum::<i64>(), idx.total[r]);
    }
    assert_eq!(idx.total[d.exterior()], 0);
    assert_eq!(shades[d.exterior()], Shade::White);
    for (x, g) in d.crossings().iter().zip(d.geometry()) {
        let parity = if idx.total[g.source].rem_euclid(2) == 0 { 1 } else { -1 };
        assert_eq!(x.sign * parity, g.positive_sign);
        // the source quadrant has the smallest index around the crossing
        let q = g.quadrants.map(|r| idx.total[r]);
        assert_eq!(idx.total[g.source], *q.iter().min().unwrap());
    }
    let again = Diagram::from_json_str(&d.to_json_string()).unwrap();
    assert_eq!(again.to_json(), d.to_json());
    assert_eq!(again.indices(), d.indices());
}

#[test]
fn unknot_has_two_regions() {
    let d = unknot();
    assert_eq!((d.component_count(), d.arc_count(), d.region_count()), (1, 1, 2));
    let inner = 1 - d.exterior();
    assert_eq!(d.indices().total[inner].abs(), 1);
    assert_sane(&d);
}

#[test]
fn standard_knots() {
    let t = trefoil();
    assert_eq!((t.semiarc_count(), t.region_count(), t.arc_count()), (6, 5, 3));
    assert!(t.crossings().iter().all(|x| x.sign == 1));
    let m = braid_closure(2, &[-1, -1, -1]).unwrap();
    assert!(m.crossings().iter().all(|x| x.sign == -1));
    let f = figure_eight();
    assert_eq!((f.crossing_count(), f.region_count(), f.component_count()), (4, 6, 1));
    for d in [t, m, f] {
        assert_sane(&d);
    }
}

#[test]
fn hopf_link_indices() {
    let d = hopf();
    assert_eq!((d.component_count(), d.region_count()), (2, 4));
    let idx = d.indices();
    let central = (0..4).find(|&r| idx.per_component[r].iter().all(|x| x.abs() == 1));
    assert!(central.is_some());
    assert_sane(&d);
}

#[test]
fn kinks_add_one_region() {
    let d = r1_insert(&unknot(), 1, 1, Side::Left).unwrap();
    assert_eq!((d.crossing_count(), d.region_count()), (1, 3));
    assert_eq!(d.crossings()[0].sign, 1);
    assert_sane(&d);
    let t = trefoil();
    for sign in [1, -1] {
        for side in [Side::Left, Side::Right] {
            let k = r1_insert(&t, t.labels()[2], sign, side).unwrap();
            assert_eq!((k.crossing_count(), k.region_count(), k.component_count()), (4, 6, 1));
            assert_eq!(k.crossings().last().unwrap().sign, sign);
            assert_sane(&k);
        }
    }
}

#[test]
fn pokes_add_opposite_crossings() {
    let u = unlink();
    let h = r2_insert(&u, 1, 2, None).unwrap();
    assert_eq!((h.crossing_count(), h.region_count(), h.component_count(), h.piece_count()), (2, 4, 2, 1));
    assert_eq!(h.crossings().iter().map(|x| x.sign as i32).sum::<i32>(), 0);
    assert_sane(&h);

    let t = trefoil();
    let mut done = 0;
    for &a in t.labels() {
        for &b in t.labels() {
            for sides in [(Side::Left, Side::Left), (Side::Left, Side::Right), (Side::Right, Side::Left), (Side::Right, Side::Right)] {
                if let Ok(p) = r2_insert(&t, a, b, Some(sides)) {
                    assert_eq!((p.crossing_count(), p.region_count()), (5, 7));
                    let new = &p.crossings()[3..];
                    assert_eq!(new[0].sign + new[1].sign, 0);
                    assert_sane(&p);
                    done += 1;
                }
            }
        }
    }
    assert!(done > 0);
}

#[test]
fn nested_pokes_and_kinks_on_links() {
    let h = hopf();
    let k = r1_insert(&h, h.labels()[0], -1, Side::Right).unwrap();
    let p = r2_insert(&k, k.labels()[1], k.labels()[3], None).unwrap();
    assert_eq!(p.component_count(), 2);
    assert_sane(&p);
}

#[test]
fn spanning_trees_give_the_same_indices() {
    let d = figure_eight();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let mut order: Vec<usize> = (0..d.semiarc_count()).collect();
        order.shuffle(&mut rng);
        let allowed: Vec<bool> = (0..d.semiarc_count()).map(|a| order[a] % 3 != 0).collect();
        let t = d.propagate_indices(|a, _| allowed[a]);
        if let Ok(t) = t {
            assert_eq!(&t, d.indices());
        }
    }
}

#[test]
fn rejects_non_planar_rotation() {
    let mut j = trefoil().to_json();
    j.crossings[0].rot.swap(1, 3);
    j.crossings[0].orients = None;
    let err = Diagram::from_json(j).unwrap_err().to_string();
    assert!(err.contains("not planar"), "{err}");
}

#[test]
fn rejects_dangling_semiarc() {
    let mut j = trefoil().to_json();
    j.crossings[0].rot[1] = 99;
    assert!(matches!(Diagram::from_json(j), Err(Error::InvalidDiagram(_))));
}

#[test]
fn over_pair_zero_is_accepted() {
    let t = trefoil();
    let mut j = t.to_json();
    // all crossings are positive, so slot 3 is the incoming over-strand
    for x in j.crossings.iter_mut().filter(|x| x.orients.is_none()) {
        x.rot.rotate_left(3);
        x.over = 0;
    }
    let d = Diagram::from_json(j).unwrap();
    assert_eq!(d.to_json(), t.to_json());
}

#[test]
fn split_placements_are_checked() {
    let mut j = unlink().to_json();
    assert_eq!(j.placements.len(), 2);
    j.placements.pop();
    assert!(Diagram::from_json(j.clone()).is_err());
    j.placements.push(PlacementJson { outer: Incidence::new(2, Side::Right), inside: Some(Incidence::new(1, Side::Left)) });
    let nested = Diagram::from_json(j).unwrap();
    assert_eq!(nested.region_count(), 3);
    assert_sane(&nested);
}

#[test]
fn closure_with_a_strand_always_over() {
    let d = braid_closure(2, &[-1, 1]).unwrap();
    assert_eq!(d.component_count(), 2);
    assert_sane(&d);
    let again = Diagram::from_json_str(&d.to_json_string()).unwrap();
    assert_eq!(again.to_json(), d.to_json());
}
