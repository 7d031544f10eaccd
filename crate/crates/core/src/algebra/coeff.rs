//! Finite abelian coefficient groups and the unit scalars acting on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of a [`CoeffGroup`]: one residue per cyclic summand.
///
/// Ordering is lexicographic on the residue vector, which is the canonical
/// order used for weight multisets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub Vec<i64>);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, x) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        }
    }
}

/// Wire form of an [`Elem`]: a bare integer for rank one, an array otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Int(i64),
    Vec(Vec<i64>),
}

impl Elem {
    pub fn to_wire(&self) -> ElemJson {
        match self.0.as_slice() {
            [x] => ElemJson::Int(*x),
            xs => ElemJson::Vec(xs.to_vec()),
        }
    }

    pub fn from_wire(w: ElemJson, group: &CoeffGroup) -> Result<Elem> {
        let v = match w {
            ElemJson::Int(x) => vec![x],
            ElemJson::Vec(v) => v,
        };
        if v.len() != group.rank() {
            return Err(Error::CoefficientMismatch(format!("element {v:?} does not belong to {group}")));
        }
        Ok(group.reduce(&v))
    }
}

/// A scalar `coeff * t^shift`.
///
/// Outside cyclotomic-truncation mode `shift` is always zero and the scalar is
/// plain integer multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub coeff: i64,
    pub shift: i64,
}

impl Scalar {
    pub const ONE: Scalar = Scalar { coeff: 1, shift: 0 };
    pub const MINUS_ONE: Scalar = Scalar { coeff: -1, shift: 0 };

    pub fn int(coeff: i64) -> Self {
        Scalar { coeff, shift: 0 }
    }

    /// The variable `t` of the cyclotomic-truncation mode.
    pub fn t() -> Self {
        Scalar { coeff: 1, shift: 1 }
    }

    pub fn monomial(coeff: i64, shift: i64) -> Self {
        Scalar { coeff, shift }
    }

    /// Parses `5`, `-1`, `t`, `-t`, `t^2`, `3t^-1`, `2*t^3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().replace('*', "");
        if let Some(pos) = s.find('t') {
            let (c, rest) = s.split_at(pos);
            let coeff = match c {
                "" | "+" => 1,
                "-" => -1,
                c => c
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad scalar coefficient in {s:?}")))?,
            };
            let rest = &rest[1..];
            let shift = if rest.is_empty() {
                1
            } else if let Some(e) = rest.strip_prefix('^') {
                e.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?
            } else {
                return Err(Error::Parse(format!("bad scalar {s:?}")));
            };
            Ok(Scalar { coeff, shift })
        } else {
            s.parse::<i64>()
                .map(Scalar::int)
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.shift) {
            (c, 0) => write!(f, "{c}"),
            (1, 1) => write!(f, "t"),
            (-1, 1) => write!(f, "-t"),
            (1, s) => write!(f, "t^{s}"),
            (-1, s) => write!(f, "-t^{s}"),
            (c, 1) => write!(f, "{c}t"),
            (c, s) => write!(f, "{c}t^{s}"),
        }
    }
}

/// A finitely generated abelian group `Z_{n_1} x ... x Z_{n_d}`.
///
/// A modulus of `0` stands for a free summand `Z`. Free summands are only
/// meaningful for cohomology computations; twisted weights need finite groups.
///
/// In cyclotomic-truncation mode all moduli are equal to some `n` and the group
/// is read as `Z_n[t]/(t^e - 1)`, with `t` acting by cyclic shift of the
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffGroup {
    moduli: Vec<u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    cyclotomic: bool,
}

impl CoeffGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::Parse("coefficient group needs at least one summand".into()));
        }
        if moduli.contains(&1) {
            return Err(Error::Parse("modulus 1 is not allowed; drop the summand".into()));
        }
        Ok(CoeffGroup { moduli, cyclotomic: false })
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Self {
        CoeffGroup::new(vec![n]).expect("cyclic group modulus must be 0 or at least 2")
    }

    /// `Z_n[t]/(t^e - 1)` as `e` copies of `Z_n`.
    pub fn cyclotomic(n: u64, e: usize) -> Result<Self> {
        if n < 2 || e == 0 {
            return Err(Error::Parse(format!("cyclotomic truncation needs n >= 2 and e >= 1, got n={n}, e={e}")));
        }
        Ok(CoeffGroup { moduli: vec![n; e], cyclotomic: true })
    }

    /// Parses `5`, `2,3`, `0` or `5[t]/3` (cyclotomic `Z_5[t]/(t^3-1)`). Factors
    /// may also be written `Z5`, `Z2xZ4`, with a bare `Z` for the integers.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let modulus = |p: &str| -> Option<u64> {
            match p.trim().strip_prefix('Z').map(str::trim) {
                Some("") => Some(0),
                Some(n) => n.strip_prefix('_').unwrap_or(n).parse().ok(),
                None => p.trim().parse().ok(),
            }
        };
        if let Some((n, e)) = s.split_once("[t]/") {
            let n = modulus(n).ok_or_else(|| Error::Parse(format!("bad modulus in {s:?}")))?;
            let e = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return CoeffGroup::cyclotomic(n, e);
        }
        let moduli = s
            .split([',', 'x'])
            .map(|p| modulus(p).ok_or_else(|| Error::Parse(format!("bad modulus in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        CoeffGroup::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.cyclotomic
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&n| n != 0)
    }

    /// Group order, or `None` for groups with a free summand.
    pub fn order(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        Some(self.moduli.iter().product())
    }

    /// Least common multiple of the moduli (`0` if a free summand is present).
    pub fn exponent(&self) -> u64 {
        if !self.is_finite() {
            return 0;
        }
        self.moduli.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn zero(&self) -> Elem {
        Elem(vec![0; self.rank()])
    }

    fn red(n: u64, x: i128) -> i64 {
        if n == 0 {
            x as i64
        } else {
            x.rem_euclid(n as i128) as i64
        }
    }

    /// Reduces arbitrary integers into canonical residues.
    pub fn reduce(&self, v: &[i64]) -> Elem {
        assert_eq!(v.len(), self.rank(), "element rank mismatch");
        Elem(
            v.iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| Self::red(n, x as i128))
                .collect(),
        )
    }

    pub fn contains(&self, x: &Elem) -> bool {
        x.0.len() == self.rank()
            && x.0.iter().zip(&self.moduli).all(|(&v, &n)| n == 0 || (0..n as i64).contains(&v))
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        x.0.iter().all(|&v| v == 0)
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        Elem(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &n)| Self::red(n, a as i128 + b as i128))
                .collect(),
        )
    }

    pub fn add_assign(&self, x: &mut Elem, y: &Elem) {
        for ((a, &b), &n) in x.0.iter_mut().zip(&y.0).zip(&self.moduli) {
            *a = Self::red(n, *a as i128 + b as i128);
        }
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        Elem(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &n)| Self::red(n, a as i128 - b as i128))
                .collect(),
        )
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        self.mul_int(-1, x)
    }

    pub fn mul_int(&self, k: i64, x: &Elem) -> Elem {
        Elem(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &n)| Self::red(n, a as i128 * k as i128))
                .collect(),
        )
    }

    /// Checks that a scalar acts on this group at all (shifts need cyclotomic mode).
    pub fn check_scalar(&self, s: Scalar) -> Result<()> {
        if s.shift != 0 && !self.cyclotomic {
            return Err(Error::CoefficientMismatch(format!(
                "scalar {s} involves t but the coefficient group is not cyclotomic"
            )));
        }
        Ok(())
    }

    /// Applies `coeff * t^shift` to `x`.
    pub fn scale(&self, s: Scalar, x: &Elem) -> Elem {
        let y = self.mul_int(s.coeff, x);
        if s.shift == 0 || !self.cyclotomic {
            debug_assert!(s.shift == 0, "shift on non-cyclotomic group");
            return y;
        }
        let e = self.rank() as i64;
        let mut out = vec![0; self.rank()];
        for (i, v) in y.0.into_iter().enumerate() {
            out[(i as i64 + s.shift).rem_euclid(e) as usize] = v;
        }
        Elem(out)
    }

    /// Normal form of a scalar: coefficient reduced modulo the exponent, shift modulo `e`.
    pub fn normalize_scalar(&self, s: Scalar) -> Scalar {
        let l = self.exponent();
        let coeff = if l == 0 { s.coeff } else { s.coeff.rem_euclid(l as i64) };
        let shift = if self.cyclotomic { s.shift.rem_euclid(self.rank() as i64) } else { s.shift };
        Scalar { coeff, shift }
    }

    pub fn mul_scalars(&self, a: Scalar, b: Scalar) -> Scalar {
        let l = self.exponent();
        let coeff = if l == 0 {
            a.coeff * b.coeff
        } else {
            ((a.coeff as i128 * b.coeff as i128).rem_euclid(l as i128)) as i64
        };
        self.normalize_scalar(Scalar { coeff, shift: a.shift + b.shift })
    }

    /// True if the scalar is invertible on this group.
    pub fn is_unit(&self, s: Scalar) -> bool {
        self.check_scalar(s).is_ok() && self.inverse(s).is_ok()
    }

    pub fn inverse(&self, s: Scalar) -> Result<Scalar> {
        self.check_scalar(s)?;
        let l = self.exponent();
        let coeff = if l == 0 {
            if s.coeff.abs() != 1 {
                return Err(Error::NotAUnit(format!("{s} is not invertible on a group with a free summand")));
            }
            s.coeff
        } else {
            mod_inverse(s.coeff as i128, l as i128)
                .ok_or_else(|| Error::NotAUnit(format!("{s} is not coprime to the moduli {:?}", self.moduli)))?
                as i64
        };
        Ok(self.normalize_scalar(Scalar { coeff, shift: -s.shift }))
    }

    /// `s^k` for any integer `k`; negative powers require a unit.
    pub fn pow(&self, s: Scalar, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inverse(s)? } else { self.normalize_scalar(s) };
        let mut acc = self.normalize_scalar(Scalar::ONE);
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_scalars(acc, b);
            }
            b = self.mul_scalars(b, b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// All elements of a finite group in lexicographic order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let order = self
            .order()
            .ok_or_else(|| Error::UnsupportedCarrier("cannot enumerate a group with a free summand".into()))?;
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; self.rank()];
        for _ in 0..order {
            out.push(Elem(cur.clone()));
            for i in (0..cur.len()).rev() {
                cur[i] += 1;
                if cur[i] < self.moduli[i] as i64 {
                    break;
                }
                cur[i] = 0;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CoeffGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclotomic {
            return write!(f, "Z_{}[t]/(t^{}-1)", self.moduli[0], self.rank());
        }
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            if *n == 0 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z_{n}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m))
}
