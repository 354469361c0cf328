//! Cycle-star graphs, the subdivision / line / line cut-vertex operators,
//! Zagreb indices and coindices, and a harness that checks published closed
//! forms for `L(S(CS_{k,n-k}))` and `L_c(S(CS_{k,n-k}))` against brute force.

pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod io;
pub mod operators;
mod serde_pairs;
pub mod verify;

pub use error::{Error, Result};
pub use families::{cycle_star, CycleStarParams};
pub use formulas::{evaluate_formula, CutHubReading, ExactScalar, FormulaId};
pub use graph::{Graph, GraphBuilder, VertexLabel};
pub use indices::{index_report, IndexReport};
pub use operators::{apply_pipeline, line_cut_vertex_graph, line_graph, subdivision, OperatorId};
pub use verify::{verify_grid, verify_point, Verdict, VerificationRecord, VerificationReport};
