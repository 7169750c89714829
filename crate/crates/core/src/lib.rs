//! Sombor index laboratory.
//!
//! Exact degree-based topological indices, vertex and edge connectivity with
//! cut certificates, exhaustive extremal scans over small connected graphs,
//! the graph surgeries used to compare Sombor values, and a linear QSPR study
//! on the monocarboxylic acid homologous series.

pub mod connectivity;
pub mod extremal;
pub mod graph;
pub mod invariants;
pub mod qspr;
pub mod transforms;

pub use connectivity::{edge_connectivity, vertex_connectivity, CutCertificate, CutKind};
pub use graph::{Graph, GraphError};
pub use invariants::{sombor, EdgeFunction, IndexReport};

/// Absolute tolerance used for every "strictly greater" and equality-to-closed-form check.
pub const TOLERANCE: f64 = 1e-9;
