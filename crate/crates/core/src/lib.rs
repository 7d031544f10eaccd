//! Quandle cocycle invariants of oriented knots and links.
//!
//! Diagrams are planar rotation systems on semi-arcs ([`diagram`]). They are
//! colored by finite quandles, with regions colored by a quandle module for
//! shadow invariants ([`coloring`]), and weighted by 2-cocycles of the complexes
//! built in [`cohomology`]. [`invariants`] assembles the weight multisets for the
//! classical, shadow, positive, twisted, shadow-twisted and per-component
//! twisted flavors.
//!
//! Each capability has a runnable example:
//!
//! ```text
//! cargo run --example axioms
//! cargo run --example cohomology_groups
//! cargo run --example diagram_regions
//! cargo run --example colorings
//! cargo run --example classical_invariant
//! cargo run --example shadow_invariant
//! cargo run --example positive_invariant
//! cargo run --example twisted_invariant
//! cargo run --example shadow_twisted_invariant
//! cargo run --example link_twisted_invariant
//! cargo run --example reidemeister_moves
//! cargo run --example cli_session
//! ```
//!
//! The `qci` binary exposes the same operations on JSON files.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod coloring;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod linalg;

pub use error::{Error, Result};
