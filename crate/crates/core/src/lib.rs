//! Exact combinatorics of the toric ideal of a graph.
//!
//! Given a simple connected graph `G`, this crate enumerates the circuits of
//! its incidence configuration, builds fibers and a minimal binomial
//! generating set of the toric ideal `I_G`, constructs the simplicial complex
//! on minimal circuit supports together with its matching numbers, and
//! assembles the invariants `ht`, `μ`, `bar` and `ara_G`.

pub mod complex;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod invariants;
pub mod linalg;

pub use error::{Error, Result};
pub use graph::{Bipartition, EdgeCycle, Graph, IncidenceColumn};
pub use linalg::Circuit;
pub use complex::{DeltaComplex, DimensionSet};
pub use invariants::{analyze, report, Analysis, AnalysisOptions, InvariantReport};
