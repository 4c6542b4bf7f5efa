//! Hermitian spectra of mixed graphs.
//!
//! A mixed graph has undirected edges and arcs on a simple underlying graph.
//! Its Hermitian adjacency matrix has `1` for an undirected edge and `±i` for
//! an arc, so the spectrum is real. This crate computes that spectrum exactly
//! (integer characteristic polynomials, Sturm-sequence decisions) and
//! numerically, and decides membership in the families of connected
//! `C4`-free mixed graphs whose spectral radius is at most 2.
//!
//! Modules, bottom up:
//!
//! - [`graph`]: the data model and the `.mg` text format
//! - [`structure`]: cycles, cycle signs, girth, elementary subgraphs
//! - [`spectra`]: `H(D)`, characteristic polynomials, eigenvalues, radius decisions
//! - [`families`]: named graph families and orientations with prescribed cycle signs
//! - [`classify`]: the structural decision procedures with certificates
//! - [`verify`]: exhaustive enumeration and property checks
//! - [`cli`]: the `hermspec` command line

pub mod classify;
pub mod cli;
pub mod families;
pub mod graph;
pub mod spectra;
pub mod structure;
pub mod verify;

pub use graph::{EdgeKind, GraphError, MixedGraph};
