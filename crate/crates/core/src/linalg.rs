//! Exact linear algebra over `Z_n` (any `n >= 2`) and over `Z` (`n = 0`).
//!
//! Submodules of `Z_n^N` are kept in Howell form: an echelon basis whose
//! rows with pivots at or after column `j` span every element of the module
//! vanishing before `j`. Lifting such a basis to `Z^N` and adding `n e_j` for
//! the pivot-free columns gives a triangular basis of the preimage lattice,
//! which is how quotients are computed.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `(g, s, t)` with `g = gcd(a, b) >= 0` and `g = s a + t b`.
pub(crate) fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    xgcd(a, b).0
}

/// Arithmetic in `Z_n`, or checked arithmetic in `Z` when `n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Ring(i128);

impl Ring {
    fn norm(self, x: i128) -> i128 {
        if self.0 == 0 {
            x
        } else {
            x.rem_euclid(self.0)
        }
    }

    fn mul(self, a: i128, b: i128) -> Result<i128> {
        a.checked_mul(b).map(|x| self.norm(x)).ok_or(Error::Overflow("integer linear algebra"))
    }

    /// `a x + b y`, entrywise.
    fn combine(self, a: i128, x: &[i128], b: i128, y: &[i128]) -> Result<Vec<i128>> {
        x.iter()
            .zip(y)
            .map(|(&xi, &yi)| {
                let u = a.checked_mul(xi).ok_or(Error::Overflow("integer linear algebra"))?;
                let v = b.checked_mul(yi).ok_or(Error::Overflow("integer linear algebra"))?;
                let w = u.checked_add(v).ok_or(Error::Overflow("integer linear algebra"))?;
                Ok(self.norm(w))
            })
            .collect()
    }

    /// A unit `u` with `u a = gcd(a, n) mod n`.
    fn normalizing_unit(self, a: i128) -> i128 {
        let n = self.0;
        if n == 0 {
            return if a < 0 { -1 } else { 1 };
        }
        let g = gcd(a, n);
        let m = n / g;
        let (_, s, _) = xgcd(a / g, m);
        let u0 = s.rem_euclid(m.max(1));
        (0..g)
            .map(|k| u0 + k * m)
            .find(|&u| gcd(u, n) == 1)
            .expect("a unit lift always exists")
    }
}

/// A submodule of `Z_n^N` (or a sublattice of `Z^N`) in echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ring: Ring,
    cols: usize,
    rows: Vec<Option<Vec<i128>>>,
}

impl Lattice {
    /// The zero submodule.
    pub fn new(modulus: u64, cols: usize) -> Self {
        Lattice { ring: Ring(modulus as i128), cols, rows: vec![None; cols] }
    }

    /// The submodule spanned by `gens`, in canonical form.
    pub fn span<I>(modulus: u64, cols: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let mut l = Self::new(modulus, cols);
        for g in gens {
            l.insert(g.into_iter().map(i128::from).collect())?;
        }
        l.canonicalize()?;
        Ok(l)
    }

    pub fn modulus(&self) -> u64 {
        self.ring.0 as u64
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn make_pivot(&self, v: Vec<i128>, j: usize) -> Result<(Vec<i128>, Option<Vec<i128>>)> {
        let u = self.ring.normalizing_unit(v[j]);
        let row: Vec<i128> = v.iter().map(|&x| self.ring.mul(u, x)).collect::<Result<_>>()?;
        let ann = self.annihilator(&row, j)?;
        Ok((row, ann))
    }

    /// `(n / p) row`, which vanishes at the pivot; `None` over `Z` or when zero.
    fn annihilator(&self, row: &[i128], j: usize) -> Result<Option<Vec<i128>>> {
        let n = self.ring.0;
        if n == 0 {
            return Ok(None);
        }
        let k = n / row[j];
        let a: Vec<i128> = row.iter().map(|&x| self.ring.mul(k, x)).collect::<Result<_>>()?;
        Ok(a.iter().any(|&x| x != 0).then_some(a))
    }

    /// Adds one generator.
    pub fn insert(&mut self, v: Vec<i128>) -> Result<()> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!("vector of length {} in a lattice of width {}", v.len(), self.cols)));
        }
        let mut stack = vec![v];
        while let Some(v) = stack.pop() {
            let mut v: Vec<i128> = v.into_iter().map(|x| self.ring.norm(x)).collect();
            for j in 0..self.cols {
                if v[j] == 0 {
                    continue;
                }
                match self.rows[j].take() {
                    None => {
                        let (row, ann) = self.make_pivot(v, j)?;
                        self.rows[j] = Some(row);
                        stack.extend(ann);
                        break;
                    }
                    Some(b) => {
                        let (p, x) = (b[j], v[j]);
                        if x % p == 0 {
                            v = self.ring.combine(1, &v, -(x / p), &b)?;
                            self.rows[j] = Some(b);
                        } else {
                            let (g, s, t) = xgcd(p, x);
                            let nb = self.ring.combine(s, &b, t, &v)?;
                            v = self.ring.combine(x / g, &b, -(p / g), &v)?;
                            debug_assert_eq!(v[j], 0);
                            let (nb, ann) = self.make_pivot(nb, j)?;
                            self.rows[j] = Some(nb);
                            stack.extend(ann);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Reduces entries above each pivot, giving the unique canonical form.
    pub fn canonicalize(&mut self) -> Result<()> {
        for j in 0..self.cols {
            let Some(pj) = self.rows[j].clone() else { continue };
            for i in 0..j {
                let Some(ri) = self.rows[i].as_ref() else { continue };
                let q = ri[j].div_euclid(pj[j]);
                if q != 0 {
                    let new = self.ring.combine(1, ri, -q, &pj)?;
                    self.rows[i] = Some(new);
                }
            }
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the echelon rows.
    pub fn reduce(&self, v: &[i64]) -> Result<Vec<i128>> {
        let mut v: Vec<i128> = v.iter().map(|&x| self.ring.norm(x as i128)).collect();
        for j in 0..self.cols {
            if v[j] == 0 {
                continue;
            }
            if let Some(b) = &self.rows[j] {
                if v[j] % b[j] == 0 {
                    v = self.ring.combine(1, &v, -(v[j] / b[j]), b)?;
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Echelon rows in pivot order.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.rows.iter().flatten().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
    }

    /// `(column, pivot value)` for every echelon row.
    pub fn pivots(&self) -> Vec<(usize, u64)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.as_ref().map(|r| (j, r[j] as u64)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Option::is_none)
    }

    /// Triangular basis of the preimage lattice in `Z^N`; over `Z` just the rows.
    fn lifted_basis(&self) -> Vec<(usize, Vec<i128>)> {
        let n = self.ring.0;
        (0..self.cols)
            .filter_map(|j| match &self.rows[j] {
                Some(r) => Some((j, r.clone())),
                None if n > 0 => {
                    let mut e = vec![0; self.cols];
                    e[j] = n;
                    Some((j, e))
                }
                None => None,
            })
            .collect()
    }

    /// Coordinates of `v` in the lifted basis; reduced mod `n` when `n > 0`.
    ///
    /// For `n > 0` the residual is tracked mod `n^2`. This changes the vector
    /// being decomposed only by elements of `n` times the lattice, which moves
    /// the coordinates by multiples of `n`.
    fn coords(&self, basis: &[(usize, Vec<i128>)], v: &[i128]) -> Result<Vec<i128>> {
        let n = self.ring.0;
        let big = Ring(n.checked_mul(n).ok_or(Error::Overflow("modulus squared"))?);
        let mut r: Vec<i128> = v.iter().map(|&x| big.norm(x)).collect();
        let mut out = Vec::with_capacity(basis.len());
        let mut next = 0;
        for (j, b) in basis {
            if let Some(c) = r[next..*j].iter().position(|&x| x != 0) {
                return Err(Error::Inconsistent(format!("vector leaves the lattice at column {}", next + c)));
            }
            let p = b[*j];
            if r[*j] % p != 0 {
                return Err(Error::Inconsistent(format!("vector leaves the lattice at column {j}")));
            }
            let t = r[*j] / p;
            r = big.combine(1, &r, -t, b)?;
            out.push(if n > 0 { t.rem_euclid(n) } else { t });
            next = j + 1;
        }
        if let Some(c) = r[next..].iter().position(|&x| x != 0) {
            return Err(Error::Inconsistent(format!("vector leaves the lattice at column {}", next + c)));
        }
        Ok(out)
    }

    /// Isomorphism type of this module.
    pub fn structure(&self) -> Result<GroupStructure> {
        quotient(self, &Lattice::new(self.modulus(), self.cols))
    }

    /// Number of elements of a submodule of `Z_n^N`; `None` over `Z`.
    pub fn order(&self) -> Option<u128> {
        let n = self.ring.0;
        (n > 0).then(|| {
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(j, r)| r.as_ref().map(|r| (n / r[j]) as u128))
                .product()
        })
    }
}

/// Isomorphism type of `outer / inner`; `inner` must be contained in `outer`.
pub fn quotient(outer: &Lattice, inner: &Lattice) -> Result<GroupStructure> {
    if outer.ring != inner.ring || outer.cols != inner.cols {
        return Err(Error::SizeMismatch("quotient of lattices over different ambient modules".into()));
    }
    let n = outer.ring.0;
    let basis = outer.lifted_basis();
    let gens = inner.lifted_basis();
    let t: Vec<Vec<i128>> =
        gens.iter().map(|(_, g)| outer.coords(&basis, g)).collect::<Result<_>>()?;
    let diag = diagonalize(t, basis.len(), outer.ring)?;
    let mut orders = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let d = diag.get(k).copied().unwrap_or(0);
        orders.push(if n > 0 { gcd(d, n) as u64 } else { d.unsigned_abs() as u64 });
    }
    Ok(GroupStructure::from_cyclic_orders(&orders))
}

/// Diagonalizes `t` by unimodular row and column operations; returns the diagonal.
fn diagonalize(mut t: Vec<Vec<i128>>, cols: usize, ring: Ring) -> Result<Vec<i128>> {
    let rows = t.len();
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = (k..rows).flat_map(|i| (k..cols).map(move |j| (i, j))).find(|&(i, j)| t[i][j] != 0)
        else {
            break;
        };
        t.swap(k, pi);
        for row in t.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            for i in k + 1..rows {
                if t[i][k] == 0 {
                    continue;
                }
                let (a, b) = (t[k][k], t[i][k]);
                if b % a == 0 {
                    let new = ring.combine(1, &t[i], -(b / a), &t[k])?;
                    t[i] = new;
                } else {
                    let (g, s, u) = xgcd(a, b);
                    let rk = ring.combine(s, &t[k], u, &t[i])?;
                    let ri = ring.combine(b / g, &t[k], -(a / g), &t[i])?;
                    t[k] = rk;
                    t[i] = ri;
                }
            }
            let mut dirty = false;
            for j in k + 1..cols {
                if t[k][j] == 0 {
                    continue;
                }
                let (a, b) = (t[k][k], t[k][j]);
                if b % a == 0 {
                    let q = b / a;
                    for row in t.iter_mut() {
                        row[j] = ring.norm(row[j] - ring.mul(q, row[k])?);
                    }
                } else {
                    let (g, s, u) = xgcd(a, b);
                    for row in t.iter_mut() {
                        let (x, y) = (row[k], row[j]);
                        row[k] = ring.norm(ring.mul(s, x)? + ring.mul(u, y)?);
                        row[j] = ring.norm(ring.mul(b / g, x)? - ring.mul(a / g, y)?);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(t[k][k].abs());
    }
    Ok(diag)
}

/// A finitely generated abelian group `Z^r ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_s}` with `d_1 | d_2 | ... | d_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

fn prime_powers(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            let mut e = 0;
            while x % p == 0 {
                x /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

impl GroupStructure {
    pub fn trivial() -> Self {
        GroupStructure { free_rank: 0, torsion: Vec::new() }
    }

    /// The direct sum of cyclic groups of the given orders (0 meaning `Z`).
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let free_rank = orders.iter().filter(|&&d| d == 0).count();
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
        for &d in orders.iter().filter(|&&d| d > 1) {
            for (p, e) in prime_powers(d) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut es) in by_prime {
            es.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in es.into_iter().enumerate() {
                torsion[len - 1 - i] *= p.pow(e);
            }
        }
        GroupStructure { free_rank, torsion }
    }

    pub fn direct_sum(&self, other: &GroupStructure) -> Self {
        let mut orders: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
        orders.extend(std::iter::repeat_n(0, self.free_rank + other.free_rank));
        Self::from_cyclic_orders(&orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Minimal number of generators; the dimension when the coefficients form a field.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Group order, or `None` if infinite.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().map(|&d| d as u128).product())
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if k == 1 { format!("Z_{d}") } else { format!("Z_{d}^{k}") });
            i += k;
        }
        f.write_str(&parts.join(" + "))
    }
}

/// A dense matrix over `Z_n` or `Z`, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: i64, modulus: u64) {
        let e = &mut self.data[i * self.cols + j];
        *e = if modulus == 0 { *e + x } else { (*e + x).rem_euclid(modulus as i64) };
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, x: &[i64], modulus: u64) -> Vec<i64> {
        (0..self.rows)
            .map(|i| {
                let s: i128 = (0..self.cols).map(|j| self.get(i, j) as i128 * x[j] as i128).sum();
                if modulus == 0 {
                    s as i64
                } else {
                    s.rem_euclid(modulus as i128) as i64
                }
            })
            .collect()
    }
}

/// `{ x : A x = 0 }`.
pub fn kernel(a: &Matrix, modulus: u64) -> Result<Lattice> {
    let (b, w) = (a.rows, a.cols);
    let mut aug = Lattice::new(modulus, b + w);
    for j in 0..w {
        let mut v: Vec<i128> = a.column(j).into_iter().map(i128::from).collect();
        v.extend((0..w).map(|i| i128::from(i == j)));
        aug.insert(v)?;
    }
    let mut ker = Lattice::new(modulus, w);
    for r in aug.rows[b..].iter().flatten() {
        ker.insert(r[b..].to_vec())?;
    }
    ker.canonicalize()?;
    Ok(ker)
}

/// The span of the columns of `A`.
pub fn image(a: &Matrix, modulus: u64) -> Result<Lattice> {
    Lattice::span(modulus, a.rows, (0..a.cols).map(|j| a.column(j)))
}
