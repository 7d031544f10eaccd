//! Multiplication tables of small finite groups, for building conjugation quandles.
//!
//! A table `t` has `t[x][y] = x y`; element 0 is always the identity.

/// Cyclic group `Z_n` under addition.
pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect()
}

/// Dihedral group of order `2n`; element `s^f r^k` is encoded as `f n + k`.
pub fn dihedral(n: usize) -> Vec<Vec<usize>> {
    let enc = |f: usize, k: usize| f * n + k;
    let mut t = vec![vec![0; 2 * n]; 2 * n];
    for (x, row) in t.iter_mut().enumerate() {
        let (f1, k1) = (x / n, x % n);
        for (y, slot) in row.iter_mut().enumerate() {
            let (f2, k2) = (y / n, y % n);
            // r^k s = s r^{-k}
            let k = if f2 == 0 { (k1 + k2) % n } else { (n - k1 + k2) % n };
            *slot = enc((f1 + f2) % 2, k);
        }
    }
    t
}

/// Quaternion group `{±1, ±i, ±j, ±k}` encoded as `sign * 4 + unit` with units `1, i, j, k`.
pub fn quaternion() -> Vec<Vec<usize>> {
    // unit product table: (unit, sign flip)
    const U: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut t = vec![vec![0; 8]; 8];
    for (x, row) in t.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            let (u, s) = U[x % 4][y % 4];
            *slot = ((x / 4 + y / 4 + s) % 2) * 4 + u;
        }
    }
    t
}

/// Symmetric group on `n` letters, permutations listed in lexicographic order;
/// `x y` applies `x` first.
pub fn symmetric(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    loop {
        let mut p = perms.last().unwrap().clone();
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        perms.push(p);
    }
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    perms
        .iter()
        .map(|x| {
            perms
                .iter()
                .map(|y| index(&(0..n).map(|i| y[x[i]]).collect::<Vec<_>>()))
                .collect()
        })
        .collect()
}

/// Direct product; `(g, h)` is encoded as `g * |H| + h`.
pub fn direct_product(g: &[Vec<usize>], h: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = h.len();
    let n = g.len() * m;
    (0..n)
        .map(|x| (0..n).map(|y| g[x / m][y / m] * m + h[x % m][y % m]).collect())
        .collect()
}

/// One representative of every isomorphism class of groups of order at most 8.
pub fn groups_up_to_order_8() -> Vec<(&'static str, Vec<Vec<usize>>)> {
    let z2 = cyclic(2);
    vec![
        ("Z1", cyclic(1)),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", direct_product(&z2, &z2)),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric(3)),
        ("Z7", cyclic(7)),
        ("Z8", cyclic(8)),
        ("Z2xZ4", direct_product(&z2, &cyclic(4))),
        ("Z2xZ2xZ2", direct_product(&z2, &direct_product(&z2, &z2))),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
    ]
}
