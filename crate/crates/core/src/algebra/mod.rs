//! Quandles, quandle modules, coefficient groups and orbits.

pub mod coeff;
pub mod groups;
pub mod module;
pub mod quandle;

pub use coeff::{CoeffGroup, Elem, ElemJson, Scalar};
pub use module::{check_module, product_module, ModElem, ModuleJson, QModule};
pub use quandle::{check_quandle, Axiom, AxiomReport, Quandle, QuandleJson, Violation};

use serde::Serialize;

/// A partition of `0..n` into orbits, numbered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitMap {
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl OrbitMap {
    /// Closes `0..n` under the moves produced by `step`.
    pub fn from_generators(n: usize, step: impl Fn(usize, &mut dyn FnMut(usize))) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        for a in 0..n {
            step(a, &mut |b| {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            });
        }
        let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
        Self::from_labels(&roots)
    }

    /// Builds the partition whose classes are the elements sharing a label.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let mut orbit_of = Vec::with_capacity(labels.len());
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for (a, l) in labels.iter().enumerate() {
            let id = *ids.entry(l.clone()).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[id].push(a);
            orbit_of.push(id);
        }
        OrbitMap { orbit_of, orbits }
    }

    pub fn orbit_of(&self, a: usize) -> usize {
        self.orbit_of[a]
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    pub fn size(&self) -> usize {
        self.orbit_of.len()
    }
}
