//! Independent reference computations. Nothing here calls the library code
//! under test beyond plain accessors on diagrams, quandles and cochains.

use std::collections::{BTreeSet, VecDeque};

use qci::algebra::{Axiom, Quandle};
use qci::cohomology::CochainEval;
use qci::diagram::Diagram;

/// First axiom failure of an operation table, scanning self-distributivity
/// over `(a, b, c)`, then surjectivity of each right translation over
/// `(a, b)`, then idempotence, all in lexicographic order.
pub fn first_violation(op: &[Vec<usize>]) -> Option<(Axiom, Vec<i64>)> {
    let n = op.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op[op[a][b]][c] != op[op[a][c]][op[b][c]] {
                    return Some((Axiom::SelfDistributivity, vec![a as i64, b as i64, c as i64]));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !(0..n).any(|x| op[x][b] == a) {
                return Some((Axiom::Invertibility, vec![a as i64, b as i64]));
            }
        }
    }
    (0..n).find(|&a| op[a][a] != a).map(|a| (Axiom::Idempotence, vec![a as i64]))
}

/// Rank of an integer matrix modulo a prime, by dense Gauss–Jordan elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).expect("prime modulus");
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let s = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Which explicit cocycle equation to write down.
#[derive(Clone, Copy, Debug)]
pub enum CocycleEq {
    /// `ω(a,b) + ω(a◁b,c) = ω(a◁c,b◁c) + ω(a,c)`
    Quandle,
    /// `ω(a,c) + ω(a◁b,c) = ω(a◁c,b◁c) + ω(a,b) + 2ω(b,c)`
    Positive,
    /// `ω(a◁c,b◁c) - αω(a,b) - ω(a◁b,c) + αω(a,c) + (1-α)ω(b,c) = 0`
    Twisted(i64),
}

/// Dimensions of the cocycles, coboundaries and cohomology in degree 2 over
/// `Z_p` with the trivial module, on cochains vanishing on the diagonal.
pub fn degree_two_dims(q: &Quandle, p: i64, eq: CocycleEq) -> (usize, usize, usize) {
    let n = q.size();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    let var = |a: usize, b: usize| pairs.iter().position(|&x| x == (a, b));
    let o = |a: usize, b: usize| q.op(a, b);

    let mut equations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut row = vec![0i64; pairs.len()];
                let mut add = |x: usize, y: usize, k: i64| {
                    if let Some(i) = var(x, y) {
                        row[i] += k;
                    }
                };
                match eq {
                    CocycleEq::Quandle => {
                        add(a, b, 1);
                        add(o(a, b), c, 1);
                        add(o(a, c), o(b, c), -1);
                        add(a, c, -1);
                    }
                    CocycleEq::Positive => {
                        add(a, c, 1);
                        add(o(a, b), c, 1);
                        add(o(a, c), o(b, c), -1);
                        add(a, b, -1);
                        add(b, c, -2);
                    }
                    CocycleEq::Twisted(alpha) => {
                        add(o(a, c), o(b, c), 1);
                        add(a, b, -alpha);
                        add(o(a, b), c, -1);
                        add(a, c, alpha);
                        add(b, c, 1 - alpha);
                    }
                }
                equations.push(row);
            }
        }
    }
    let z = pairs.len() - rank_mod_p(equations, p);

    // Coboundaries of θ: Q → Z_p, one column per generator θ = δ_x.
    let mut images = Vec::new();
    for x in 0..n {
        let th = |y: usize| (y == x) as i64;
        let row: Vec<i64> = pairs
            .iter()
            .map(|&(a, b)| match eq {
                CocycleEq::Quandle => th(a) - th(o(a, b)),
                CocycleEq::Positive => th(a) + th(o(a, b)) - 2 * th(b),
                CocycleEq::Twisted(alpha) => alpha * th(a) - th(o(a, b)) + (1 - alpha) * th(b),
            })
            .collect();
        images.push(row);
    }
    let b = if pairs.is_empty() { 0 } else { rank_mod_p(images, p) };
    (z, b, z - b)
}

/// Region indices by breadth-first search: the region left of a semi-arc has
/// index one more than the region on its right, and the exterior has index 0.
pub fn region_indices(d: &Diagram) -> Vec<i64> {
    let r = d.region_count();
    let mut idx = vec![None; r];
    idx[d.exterior()] = Some(0i64);
    let mut queue = VecDeque::from([d.exterior()]);
    while let Some(x) = queue.pop_front() {
        let v = idx[x].unwrap();
        for a in 0..d.semiarc_count() {
            let (l, rr) = d.sides(a);
            for (from, to, step) in [(rr, l, 1), (l, rr, -1)] {
                if from == x && idx[to].is_none() {
                    idx[to] = Some(v + step);
                    queue.push_back(to);
                }
            }
        }
    }
    idx.into_iter().map(|x| x.expect("connected dual graph")).collect()
}

/// Per crossing: `(sign, source region, a arc, b arc)` read off the raw slots.
/// Slot 0 is the incoming under-strand and slot 1 is on the over-strand.
pub fn crossing_data(d: &Diagram) -> Vec<(i8, usize, usize, usize)> {
    d.crossings()
        .iter()
        .map(|x| {
            let [s0, s1, s2, _] = x.slots;
            if x.sign > 0 {
                (1, d.sides(s0).1, d.arc_of(s0), d.arc_of(s1))
            } else {
                (-1, d.sides(s2).1, d.arc_of(s2), d.arc_of(s1))
            }
        })
        .collect()
}

/// `Σ ε(x) α^{-i(x)} ω(a, b)` over `Z_n`, with everything recomputed from scratch.
pub fn twisted_weight(d: &Diagram, colors: &[usize], omega: &dyn CochainEval, alpha: i64) -> i64 {
    let n = omega.coeff().moduli()[0] as i64;
    let ainv = (1..n).find(|y| (alpha * y).rem_euclid(n) == 1).expect("unit");
    let idx = region_indices(d);
    let pow = |k: i64| {
        let (base, e) = if k >= 0 { (ainv, k) } else { (alpha, -k) };
        (0..e).fold(1i64, |acc, _| acc * base % n)
    };
    let zero = omega.module().zero();
    let mut acc = 0;
    for (sign, src, a, b) in crossing_data(d) {
        let w = omega.eval(&zero, &[colors[a], colors[b]]).0[0];
        acc = (acc + sign as i64 * pow(idx[src]) * w).rem_euclid(n);
    }
    acc
}

/// All quandles with at most `max` elements, one per isomorphism class.
pub fn small_quandles(max: usize) -> Vec<Quandle> {
    let mut out = Vec::new();
    for n in 1..=max {
        let mut seen = BTreeSet::new();
        let perms = permutations(n);
        // Column b is a permutation fixing b.
        let columns: Vec<Vec<&Vec<usize>>> = (0..n).map(|b| perms.iter().filter(|p| p[b] == b).collect()).collect();
        let mut choice = vec![0usize; n];
        loop {
            let op: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| columns[b][choice[b]][a]).collect()).collect();
            if first_violation(&op).is_none() {
                let canon = perms.iter().map(|p| relabel(&op, p)).min().unwrap();
                if seen.insert(canon) {
                    out.push(Quandle::from_tables(op, None).unwrap());
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                choice[i] += 1;
                if choice[i] < columns[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

fn relabel(op: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    let n = op.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[p[a]][p[b]] = p[op[a][b]];
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Action tables `act[m][a]` of every module of the given size over `q`.
pub fn small_modules(q: &Quandle, size: usize) -> Vec<Vec<Vec<usize>>> {
    let n = q.size();
    let perms = permutations(size);
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let act: Vec<Vec<usize>> = (0..size).map(|m| (0..n).map(|a| perms[choice[a]][m]).collect()).collect();
        let ok = (0..size).all(|m| {
            (0..n).all(|b| (0..n).all(|c| act[act[m][b]][c] == act[act[m][c]][q.op(b, c)]))
        });
        if ok {
            out.push(act);
        }
        let mut i = 0;
        while i < n {
            choice[i] += 1;
            if choice[i] < perms.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}
