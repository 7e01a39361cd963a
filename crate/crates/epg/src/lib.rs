//! Enhanced power graphs of finite groups.
//!
//! The enhanced power graph of a group joins two elements exactly when some
//! cyclic subgroup contains both. This crate builds these graphs (and the
//! plain power and commuting graphs) for groups given as direct products of
//! cyclic, generalized-quaternion and dihedral factors or as raw
//! multiplication tables, computes their invariants exactly (dominating
//! sets, components, diameter, domination number, vertex connectivity,
//! Laplacian spectra), and cross-checks the closed-form characterizations
//! that hold for finite nilpotent groups against those brute-force values.
//!
//! Entry points:
//! - [`group::Group::parse`] builds a group from a spec string like
//!   `"Z3xZ9xQ16"`.
//! - [`graph::enhanced_power_graph`] and friends construct graphs.
//! - [`metrics`] computes exact invariants.
//! - [`spectrum`] has the Laplacian machinery.
//! - [`oracle::verify`] runs every applicable closed form against brute
//!   force and reports per-row matches.
//! - [`cli::run`] backs the `epg` binary.
//!
//! The `examples/` directory shows one runnable program per capability.

pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod metrics;
pub mod num;
pub mod oracle;
pub mod spectrum;

pub use error::{Error, Result};
