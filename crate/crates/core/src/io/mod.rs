//! Graph file formats and report serialisation.

mod dot;
mod edge_list;
mod graph6;
mod report;

pub use dot::emit_dot;
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};
pub use report::{emit_report, ReportFormat};
