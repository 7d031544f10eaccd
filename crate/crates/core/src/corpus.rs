//! The bundled diagram corpus: standard knots and links, each with a pair of
//! diagrams related by one Reidemeister III move.

use crate::diagram::Diagram;
use crate::error::Result;

pub struct Entry {
    pub name: &'static str,
    pub base: &'static str,
    pub r3: (&'static str, &'static str),
}

macro_rules! entry {
    ($name:literal) => {
        Entry {
            name: $name,
            base: include_str!(concat!("../corpus/", $name, ".json")),
            r3: (
                include_str!(concat!("../corpus/r3/", $name, "_a.json")),
                include_str!(concat!("../corpus/r3/", $name, "_b.json")),
            ),
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!("unknot"),
    entry!("trefoil"),
    entry!("trefoil_mirror"),
    entry!("figure_eight"),
    entry!("hopf"),
    entry!("hopf_reversed"),
    entry!("unlink2"),
];

/// Coloring counts by dihedral quandles, keyed `name/dihedralN`.
pub const GOLDEN_COLORINGS: &str = include_str!("../corpus/golden/colorings.json");

pub fn entry(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

impl Entry {
    pub fn diagram(&self) -> Result<Diagram> {
        Diagram::from_json_str(self.base)
    }

    pub fn r3_pair(&self) -> Result<(Diagram, Diagram)> {
        Ok((Diagram::from_json_str(self.r3.0)?, Diagram::from_json_str(self.r3.1)?))
    }
}

/// Looks up a corpus diagram by name.
pub fn diagram(name: &str) -> Option<Diagram> {
    entry(name).map(|e| e.diagram().expect("bundled diagrams parse"))
}
