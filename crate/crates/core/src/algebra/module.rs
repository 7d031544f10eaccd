//! Quandle modules: sets with a right action of a quandle satisfying
//! `(m ◁ b) ◁ c = (m ◁ c) ◁ (b ◁ c)` and invertibility of `m ↦ m ◁ b`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::quandle::{Axiom, AxiomReport, Quandle, Violation};
use super::OrbitMap;
use crate::error::{Error, Result};

/// An element of a module carrier.
///
/// Finite carriers use a single coordinate (the element index), the integer
/// module one coordinate, the orbit lattice one coordinate per orbit, and
/// products concatenate the coordinates of their factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModElem(pub Vec<i64>);

impl ModElem {
    pub fn scalar(x: i64) -> Self {
        ModElem(vec![x])
    }
}

impl fmt::Display for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [x] => write!(f, "{x}"),
            xs => write!(f, "{xs:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Carrier {
    Finite { size: usize, act: Vec<usize>, inv: Vec<usize>, labels: Option<Vec<String>> },
    /// `Z` with `m ◁ a = m + 1`.
    Integers,
    /// `⊕_O Z e_O` with `m ◁ a = m + e_{O(a)}`.
    OrbitLattice { orbit_of: Vec<usize>, rank: usize },
    Product(Vec<QModule>),
}

/// A module over a quandle with `n` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QModule {
    n: usize,
    carrier: Carrier,
}

impl QModule {
    /// A finite module from its action table `act[m][a] = m ◁ a`.
    ///
    /// Only structure is checked here; use [`check_module`] for the axioms.
    pub fn finite(act: Vec<Vec<usize>>, inv: Option<Vec<Vec<usize>>>, quandle_size: usize) -> Result<Self> {
        let size = act.len();
        if size == 0 {
            return Err(Error::MalformedTable("module needs at least one element".into()));
        }
        for (m, row) in act.iter().enumerate() {
            if row.len() != quandle_size {
                return Err(Error::SizeMismatch(format!(
                    "action row {m} has {} entries for a quandle of size {quandle_size}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= size) {
                return Err(Error::MalformedTable(format!("action entry {x} out of range 0..{size}")));
            }
        }
        let inv = match inv {
            Some(inv) => {
                if inv.len() != size || inv.iter().any(|r| r.len() != quandle_size || r.iter().any(|&x| x >= size)) {
                    return Err(Error::MalformedTable("inverse action table has the wrong shape".into()));
                }
                inv
            }
            None => {
                let mut inv = vec![vec![usize::MAX; quandle_size]; size];
                for (m, row) in act.iter().enumerate() {
                    for (a, &x) in row.iter().enumerate() {
                        if inv[x][a] == usize::MAX {
                            inv[x][a] = m;
                        }
                    }
                }
                // Non-bijective columns are left as `usize::MAX` placeholders and
                // reported by `check_module`; clamp so the tables stay in range.
                for row in &mut inv {
                    for x in row.iter_mut() {
                        if *x == usize::MAX {
                            *x = 0;
                        }
                    }
                }
                inv
            }
        };
        Ok(QModule {
            n: quandle_size,
            carrier: Carrier::Finite { size, act: act.concat(), inv: inv.concat(), labels: None },
        })
    }

    /// The quandle acting on itself by `◁`.
    pub fn regular(q: &Quandle) -> Self {
        Self::finite(q.op_table(), Some(q.inv_table()), q.size()).expect("quandle tables have module shape")
    }

    /// The one-element module.
    pub fn trivial(q: &Quandle) -> Self {
        Self::finite(vec![vec![0; q.size()]], None, q.size()).expect("one-element module")
    }

    /// `Z_2` with `m ◁ a = m + 1 mod 2`.
    pub fn parity(q: &Quandle) -> Self {
        Self::finite(vec![vec![1; q.size()], vec![0; q.size()]], None, q.size()).expect("parity module")
    }

    /// The symbolic module `Z` with `m ◁ a = m + 1`.
    pub fn integers(q: &Quandle) -> Self {
        QModule { n: q.size(), carrier: Carrier::Integers }
    }

    /// The symbolic module `⊕_O Z e_O` over the orbits of `q`.
    pub fn orbit_lattice(q: &Quandle) -> Self {
        let o = q.orbits();
        QModule {
            n: q.size(),
            carrier: Carrier::OrbitLattice { orbit_of: (0..q.size()).map(|a| o.orbit_of(a)).collect(), rank: o.count() },
        }
    }

    pub fn with_labels(mut self, new: Vec<String>) -> Result<Self> {
        match &mut self.carrier {
            Carrier::Finite { size, labels, .. } if new.len() == *size => {
                *labels = Some(new);
                Ok(self)
            }
            _ => Err(Error::SizeMismatch("labels only apply to finite carriers of matching size".into())),
        }
    }

    pub fn quandle_size(&self) -> usize {
        self.n
    }

    /// Number of coordinates of a [`ModElem`].
    pub fn dim(&self) -> usize {
        match &self.carrier {
            Carrier::Finite { .. } | Carrier::Integers => 1,
            Carrier::OrbitLattice { rank, .. } => *rank,
            Carrier::Product(fs) => fs.iter().map(QModule::dim).sum(),
        }
    }

    /// Number of elements, or `None` for a symbolic carrier.
    pub fn size(&self) -> Option<usize> {
        match &self.carrier {
            Carrier::Finite { size, .. } => Some(*size),
            Carrier::Integers | Carrier::OrbitLattice { .. } => None,
            Carrier::Product(fs) => fs.iter().try_fold(1usize, |acc, f| f.size().map(|s| acc * s)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    pub fn is_integers(&self) -> bool {
        matches!(self.carrier, Carrier::Integers)
    }

    pub fn factors(&self) -> Option<&[QModule]> {
        match &self.carrier {
            Carrier::Product(fs) => Some(fs),
            _ => None,
        }
    }

    pub fn zero(&self) -> ModElem {
        ModElem(vec![0; self.dim()])
    }

    /// True if `m` is a well-formed element of this carrier.
    pub fn contains(&self, m: &ModElem) -> bool {
        if m.0.len() != self.dim() {
            return false;
        }
        match &self.carrier {
            Carrier::Finite { size, .. } => (0..*size as i64).contains(&m.0[0]),
            Carrier::Integers | Carrier::OrbitLattice { .. } => true,
            Carrier::Product(fs) => {
                let mut off = 0;
                fs.iter().all(|f| {
                    let d = f.dim();
                    let ok = f.contains(&ModElem(m.0[off..off + d].to_vec()));
                    off += d;
                    ok
                })
            }
        }
    }

    /// `m ◁^sign a`.
    pub fn act(&self, m: &ModElem, a: usize, sign: i8) -> ModElem {
        let mut out = m.clone();
        self.act_in_place(&mut out.0, a, sign);
        out
    }

    fn act_in_place(&self, m: &mut [i64], a: usize, sign: i8) {
        let step = if sign >= 0 { 1 } else { -1 };
        match &self.carrier {
            Carrier::Finite { act, inv, .. } => {
                let t = if sign >= 0 { act } else { inv };
                m[0] = t[m[0] as usize * self.n + a] as i64;
            }
            Carrier::Integers => m[0] += step,
            Carrier::OrbitLattice { orbit_of, .. } => m[orbit_of[a]] += step,
            Carrier::Product(fs) => {
                let mut off = 0;
                for f in fs {
                    let d = f.dim();
                    f.act_in_place(&mut m[off..off + d], a, sign);
                    off += d;
                }
            }
        }
    }

    /// Position of `m` in the lexicographic enumeration of a finite carrier.
    pub fn index_of(&self, m: &ModElem) -> Option<usize> {
        match &self.carrier {
            Carrier::Finite { size, .. } => usize::try_from(m.0[0]).ok().filter(|&i| i < *size),
            Carrier::Product(fs) => {
                let mut idx = 0usize;
                let mut off = 0;
                for f in fs {
                    let d = f.dim();
                    idx = idx * f.size()? + f.index_of(&ModElem(m.0[off..off + d].to_vec()))?;
                    off += d;
                }
                Some(idx)
            }
            _ => None,
        }
    }

    /// Inverse of [`QModule::index_of`].
    pub fn elem_at(&self, mut idx: usize) -> Option<ModElem> {
        match &self.carrier {
            Carrier::Finite { size, .. } => (idx < *size).then(|| ModElem::scalar(idx as i64)),
            Carrier::Product(fs) => {
                let mut parts = Vec::with_capacity(fs.len());
                for f in fs.iter().rev() {
                    let s = f.size()?;
                    parts.push(f.elem_at(idx % s)?);
                    idx /= s;
                }
                (idx == 0).then(|| ModElem(parts.into_iter().rev().flat_map(|p| p.0).collect()))
            }
            _ => None,
        }
    }

    /// All elements of a finite carrier in index order.
    pub fn elements(&self) -> Result<Vec<ModElem>> {
        let n = self
            .size()
            .ok_or_else(|| Error::UnsupportedCarrier("cannot enumerate a symbolic module".into()))?;
        Ok((0..n).map(|i| self.elem_at(i).expect("index in range")).collect())
    }

    /// Elements used for axiom checks: everything if finite, otherwise a window
    /// of coordinates in `-radius..=radius`.
    pub fn sample_elements(&self, radius: i64) -> Vec<ModElem> {
        match &self.carrier {
            Carrier::Finite { .. } => self.elements().expect("finite"),
            Carrier::Integers => (-radius..=radius).map(ModElem::scalar).collect(),
            Carrier::OrbitLattice { rank, .. } => {
                let mut out = vec![Vec::new()];
                for _ in 0..*rank {
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            (-radius..=radius).map(move |x| {
                                let mut w = v.clone();
                                w.push(x);
                                w
                            })
                        })
                        .collect();
                }
                out.into_iter().map(ModElem).collect()
            }
            Carrier::Product(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let s = f.sample_elements(radius);
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            s.iter().map(move |e| {
                                let mut w = v.clone();
                                w.extend_from_slice(&e.0);
                                w
                            })
                        })
                        .collect();
                }
                out.into_iter().map(ModElem).collect()
            }
        }
    }

    /// Orbits of a finite carrier under `m ~ m ◁ a`.
    pub fn orbits(&self) -> Result<OrbitMap> {
        let n = self
            .size()
            .ok_or_else(|| Error::UnsupportedCarrier("orbits of a symbolic module are not enumerated".into()))?;
        let elems = self.elements()?;
        Ok(OrbitMap::from_generators(n, |i, push| {
            for a in 0..self.n {
                push(self.index_of(&self.act(&elems[i], a, 1)).expect("closed"));
            }
        }))
    }

    /// Number of orbits, including the symbolic integer module (a single orbit).
    pub fn orbit_count(&self) -> Option<usize> {
        match &self.carrier {
            Carrier::Integers => Some(1),
            _ => self.orbits().ok().map(|o| o.count()),
        }
    }

    /// True if `m1` and `m2` lie in one orbit. Both symbolic carriers are a
    /// single orbit, since every generator `e_O` can be added or subtracted.
    pub fn same_orbit(&self, m1: &ModElem, m2: &ModElem) -> Result<bool> {
        match &self.carrier {
            Carrier::Integers | Carrier::OrbitLattice { .. } => Ok(true),
            _ => {
                let o = self.orbits()?;
                let i = self.index_of(m1).ok_or_else(|| Error::Parse(format!("{m1} not in module")))?;
                let j = self.index_of(m2).ok_or_else(|| Error::Parse(format!("{m2} not in module")))?;
                Ok(o.orbit_of(i) == o.orbit_of(j))
            }
        }
    }

    pub fn action_table(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.size()?;
        let elems = self.elements().ok()?;
        Some(
            (0..n)
                .map(|i| (0..self.n).map(|a| self.index_of(&self.act(&elems[i], a, 1)).unwrap()).collect())
                .collect(),
        )
    }

    fn inverse_table(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.size()?;
        let elems = self.elements().ok()?;
        Some(
            (0..n)
                .map(|i| (0..self.n).map(|a| self.index_of(&self.act(&elems[i], a, -1)).unwrap()).collect())
                .collect(),
        )
    }

    pub fn to_json(&self) -> ModuleJson {
        match &self.carrier {
            Carrier::Finite { labels, .. } => ModuleJson::Finite {
                v: 1,
                size: self.size().unwrap(),
                action: self.action_table().unwrap(),
                inv: self.inverse_table(),
                labels: labels.clone(),
            },
            Carrier::Integers => ModuleJson::Integers { v: 1 },
            Carrier::OrbitLattice { .. } => ModuleJson::OrbitLattice { v: 1 },
            Carrier::Product(fs) => ModuleJson::Product { v: 1, factors: fs.iter().map(QModule::to_json).collect() },
        }
    }

    /// Reads a module over `q`. Only structure is validated.
    pub fn from_json(j: ModuleJson, q: &Quandle) -> Result<Self> {
        match j {
            ModuleJson::Finite { size, action, inv, labels, .. } => {
                if size != action.len() {
                    return Err(Error::MalformedTable(format!("size {size} but {} rows", action.len())));
                }
                let m = Self::finite(action, inv, q.size())?;
                match labels {
                    Some(l) => m.with_labels(l),
                    None => Ok(m),
                }
            }
            ModuleJson::Regular { .. } => Ok(Self::regular(q)),
            ModuleJson::Trivial { .. } => Ok(Self::trivial(q)),
            ModuleJson::Parity { .. } => Ok(Self::parity(q)),
            ModuleJson::Integers { .. } => Ok(Self::integers(q)),
            ModuleJson::OrbitLattice { .. } => Ok(Self::orbit_lattice(q)),
            ModuleJson::Product { factors, .. } => {
                let fs = factors.into_iter().map(|f| Self::from_json(f, q)).collect::<Result<Vec<_>>>()?;
                product_module(&fs)
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("module serializes")
    }

    pub fn from_json_str(s: &str, q: &Quandle) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?, q)
    }

    /// Parses a module shorthand (`regular`, `trivial`, `parity`, `integers`,
    /// `orbit-lattice`, or a `x`-separated product of those) or JSON text.
    pub fn parse(s: &str, q: &Quandle) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return Self::from_json_str(s, q);
        }
        let parts: Vec<&str> = s.split('x').map(str::trim).collect();
        let one = |p: &str| -> Result<QModule> {
            Ok(match p {
                "regular" | "self" => Self::regular(q),
                "trivial" => Self::trivial(q),
                "parity" => Self::parity(q),
                "integers" | "Z" => Self::integers(q),
                "orbit-lattice" => Self::orbit_lattice(q),
                other => return Err(Error::Parse(format!("unknown module `{other}`"))),
            })
        };
        if parts.len() == 1 {
            one(parts[0])
        } else {
            product_module(&parts.into_iter().map(one).collect::<Result<Vec<_>>>()?)
        }
    }
}

/// Wire format for modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModuleJson {
    Finite {
        #[serde(default = "one")]
        v: u32,
        size: usize,
        action: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        inv: Option<Vec<Vec<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Regular {
        #[serde(default = "one")]
        v: u32,
    },
    Trivial {
        #[serde(default = "one")]
        v: u32,
    },
    Parity {
        #[serde(default = "one")]
        v: u32,
    },
    Integers {
        #[serde(default = "one")]
        v: u32,
    },
    OrbitLattice {
        #[serde(default = "one")]
        v: u32,
    },
    Product {
        #[serde(default = "one")]
        v: u32,
        factors: Vec<ModuleJson>,
    },
}

fn one() -> u32 {
    1
}

/// Product of modules with the diagonal action `(m, m') ◁ a = (m ◁ a, m' ◁ a)`.
pub fn product_module(factors: &[QModule]) -> Result<QModule> {
    let Some(first) = factors.first() else {
        return Err(Error::SizeMismatch("product of no modules".into()));
    };
    if let Some(f) = factors.iter().find(|f| f.n != first.n) {
        return Err(Error::SizeMismatch(format!(
            "factors act by quandles of sizes {} and {}",
            first.n, f.n
        )));
    }
    Ok(QModule { n: first.n, carrier: Carrier::Product(factors.to_vec()) })
}

/// Checks the module axioms against `q`.
///
/// Finite carriers are checked exhaustively; symbolic ones on the window of
/// coordinates in `-2..=2`. The witness lists the coordinates of `m` followed
/// by the quandle elements.
pub fn check_module(module: &QModule, q: &Quandle) -> Result<AxiomReport> {
    if module.n != q.size() {
        return Err(Error::SizeMismatch(format!(
            "module expects a quandle of size {}, got {}",
            module.n,
            q.size()
        )));
    }
    let n = q.size();
    let elems = module.sample_elements(2);
    let witness = |m: &ModElem, rest: &[usize]| {
        let mut w = m.0.clone();
        w.extend(rest.iter().map(|&x| x as i64));
        w
    };
    for m in &elems {
        for b in 0..n {
            for c in 0..n {
                let lhs = module.act(&module.act(m, b, 1), c, 1);
                let rhs = module.act(&module.act(m, c, 1), q.op(b, c), 1);
                if lhs != rhs {
                    return Ok(AxiomReport::Fail(Violation {
                        axiom: Axiom::SelfDistributivity,
                        witness: witness(m, &[b, c]),
                    }));
                }
            }
        }
    }
    for m in &elems {
        for b in 0..n {
            if module.act(&module.act(m, b, 1), b, -1) != *m || module.act(&module.act(m, b, -1), b, 1) != *m {
                return Ok(AxiomReport::Fail(Violation { axiom: Axiom::Invertibility, witness: witness(m, &[b]) }));
            }
        }
    }
    Ok(AxiomReport::Pass)
}
