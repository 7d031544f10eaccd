use std::fmt;

use serde::{Deserialize, Serialize};

use super::OrbitMap;
use crate::error::{Error, Result};

/// The axiom a table failed, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)`
    SelfDistributivity,
    /// `(a ◁ b) ◁~ b = (a ◁~ b) ◁ b = a`
    Invertibility,
    /// `a ◁ a = a`
    Idempotence,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::SelfDistributivity => "self-distributivity",
            Axiom::Invertibility => "invertibility",
            Axiom::Idempotence => "idempotence",
        };
        f.write_str(s)
    }
}

/// A failed axiom together with the elements that witness the failure.
///
/// For quandles the witness is `[a, b, c]`, `[a, b]` or `[a]` depending on the
/// axiom. For modules the leading entries are the coordinates of the module
/// element, followed by the quandle elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<i64>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

/// Outcome of an axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    Fail(Violation),
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            AxiomReport::Pass => None,
            AxiomReport::Fail(v) => Some(v),
        }
    }
}

/// A finite quandle given by its operation tables.
///
/// Elements are `0..size`. Both `◁` and its inverse are stored; constructors
/// only ever produce tables that pass [`check_quandle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    op: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

fn check_square(name: &str, t: &[Vec<usize>], n: usize) -> Result<()> {
    if t.len() != n {
        return Err(Error::MalformedTable(format!("{name} has {} rows, expected {n}", t.len())));
    }
    for (i, row) in t.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "{name} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "{name}[{i}][{j}] = {} is out of range 0..{n}",
                row[j]
            )));
        }
    }
    Ok(())
}

/// Inverts every right translation `x ↦ x ◁ b`; fails with the first `(a, b)`
/// such that `a` has no preimage.
fn derive_inverse(op: &[Vec<usize>]) -> std::result::Result<Vec<Vec<usize>>, Violation> {
    let n = op.len();
    let mut inv = vec![vec![usize::MAX; n]; n];
    for (x, row) in op.iter().enumerate() {
        for (b, &a) in row.iter().enumerate() {
            if inv[a][b] == usize::MAX {
                inv[a][b] = x;
            }
        }
    }
    for (a, row) in inv.iter().enumerate() {
        if let Some(b) = row.iter().position(|&x| x == usize::MAX) {
            return Err(Violation { axiom: Axiom::Invertibility, witness: vec![a as i64, b as i64] });
        }
    }
    Ok(inv)
}

/// Checks the three quandle axioms on raw tables.
///
/// Structural problems (ragged or out-of-range tables) are reported as
/// `Err`; an axiom failure is `Ok(AxiomReport::Fail)` with the first witness in
/// lexicographic order. When `inv` is omitted it is derived from `op`.
pub fn check_quandle(op: &[Vec<usize>], inv: Option<&[Vec<usize>]>) -> Result<AxiomReport> {
    let n = op.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    check_square("op", op, n)?;
    if let Some(inv) = inv {
        check_square("inv", inv, n)?;
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op[op[a][b]][c] != op[op[a][c]][op[b][c]] {
                    return Ok(AxiomReport::Fail(Violation {
                        axiom: Axiom::SelfDistributivity,
                        witness: vec![a as i64, b as i64, c as i64],
                    }));
                }
            }
        }
    }

    let derived;
    let inv = match inv {
        Some(inv) => inv,
        None => match derive_inverse(op) {
            Ok(t) => {
                derived = t;
                &derived
            }
            Err(v) => return Ok(AxiomReport::Fail(v)),
        },
    };
    for a in 0..n {
        for b in 0..n {
            if inv[op[a][b]][b] != a || op[inv[a][b]][b] != a {
                return Ok(AxiomReport::Fail(Violation {
                    axiom: Axiom::Invertibility,
                    witness: vec![a as i64, b as i64],
                }));
            }
        }
    }

    for a in 0..n {
        if op[a][a] != a {
            return Ok(AxiomReport::Fail(Violation { axiom: Axiom::Idempotence, witness: vec![a as i64] }));
        }
    }
    Ok(AxiomReport::Pass)
}

impl Quandle {
    /// Builds a quandle from tables, validating structure and axioms.
    pub fn from_tables(op: Vec<Vec<usize>>, inv: Option<Vec<Vec<usize>>>) -> Result<Self> {
        match check_quandle(&op, inv.as_deref())? {
            AxiomReport::Pass => {}
            AxiomReport::Fail(v) => return Err(Error::AxiomViolation(v.to_string())),
        }
        let inv = match inv {
            Some(inv) => inv,
            None => derive_inverse(&op).expect("checked above"),
        };
        Ok(Self::from_checked(op, inv))
    }

    fn from_checked(op: Vec<Vec<usize>>, inv: Vec<Vec<usize>>) -> Self {
        let n = op.len();
        Quandle { n, op: op.concat(), inv: inv.concat(), labels: None }
    }

    fn from_op_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let op: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_tables(op, None)
    }

    /// Dihedral quandle `R_n`: `a ◁ b = 2b - a mod n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral quandle needs n >= 1");
        Self::from_op_fn(n, |a, b| (2 * b + n - a) % n).expect("dihedral tables are quandles")
    }

    /// Trivial quandle `T_n`: `a ◁ b = a`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "trivial quandle needs n >= 1");
        Self::from_op_fn(n, |a, _| a).expect("trivial tables are quandles")
    }

    /// Alexander quandle on `Z_n`: `a ◁ b = t a + (1 - t) b` for a unit `t`.
    pub fn alexander(n: usize, t: i64) -> Result<Self> {
        let n_i = n as i64;
        Self::from_op_fn(n, |a, b| (t * a as i64 + (1 - t) * b as i64).rem_euclid(n_i) as usize)
    }

    /// Conjugation quandle `a ◁ b = b⁻¹ a b` of a finite group.
    ///
    /// `table[x][y]` is the product `x y`.
    pub fn conjugation(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        check_square("group table", table, n).map_err(|e| Error::NotAGroup(e.to_string()))?;
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::NotAGroup(format!("not associative at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for (x, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&y| table[x][y] == e)
                .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))?;
        }
        Self::from_op_fn(n, |a, b| table[table[inverse[b]][a]][b])
    }

    /// Disjoint union where elements of different summands act trivially on each other.
    pub fn disjoint_union(p: &Quandle, q: &Quandle) -> Self {
        let (m, n) = (p.size(), q.size());
        Self::from_op_fn(m + n, |a, b| match (a < m, b < m) {
            (true, true) => p.op(a, b),
            (false, false) => m + q.op(a - m, b - m),
            _ => a,
        })
        .expect("disjoint unions of quandles are quandles")
    }

    /// The subquandle on `elements`, renumbered `0..elements.len()` in the given order.
    pub fn subquandle(&self, elements: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in elements.iter().enumerate() {
            if x >= self.n || pos[x] != usize::MAX {
                return Err(Error::MalformedTable(format!("bad or repeated element {x}")));
            }
            pos[x] = i;
        }
        let k = elements.len();
        let mut op = vec![vec![0; k]; k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let c = pos[self.op(a, b)];
                if c == usize::MAX {
                    return Err(Error::MalformedTable(format!("{a} ◁ {b} leaves the subset")));
                }
                op[i][j] = c;
            }
        }
        Self::from_tables(op, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::SizeMismatch(format!("{} labels for {} elements", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `a ◁ b`
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }

    /// `a ◁~ b`
    #[inline]
    pub fn inv(&self, a: usize, b: usize) -> usize {
        self.inv[a * self.n + b]
    }

    /// `a ◁^{+1} b = a ◁ b` and `a ◁^{-1} b = a ◁~ b`.
    #[inline]
    pub fn op_signed(&self, a: usize, b: usize, sign: i8) -> usize {
        if sign >= 0 {
            self.op(a, b)
        } else {
            self.inv(a, b)
        }
    }

    pub fn op_table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn inv_table(&self) -> Vec<Vec<usize>> {
        self.inv.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Orbits of the relation `a ~ a ◁ b`.
    pub fn orbits(&self) -> OrbitMap {
        OrbitMap::from_generators(self.n, |a, push| {
            for b in 0..self.n {
                push(self.op(a, b));
            }
        })
    }

    /// Elements `c` with `a ◁ c = a` for every `a`.
    pub fn central_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&c| (0..self.n).all(|a| self.op(a, c) == a)).collect()
    }

    pub fn to_json(&self) -> QuandleJson {
        QuandleJson {
            v: 1,
            size: self.n,
            op: self.op_table(),
            inv: Some(self.inv_table()),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: QuandleJson) -> Result<Self> {
        if j.size != j.op.len() {
            return Err(Error::MalformedTable(format!("size {} but {} rows", j.size, j.op.len())));
        }
        let q = Self::from_tables(j.op, j.inv)?;
        match j.labels {
            Some(l) => q.with_labels(l),
            None => Ok(q),
        }
    }

    /// Canonical single-line JSON.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("quandle serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }
}

/// Wire format for quandles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    #[serde(default = "one")]
    pub v: u32,
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn one() -> u32 {
    1
}
