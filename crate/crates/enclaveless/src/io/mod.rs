//! Serialization: graph6, edge-list text, and sweep report emission.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{parse_graph6, parse_graph6_stream, write_graph6, Graph6Error};
pub use report::{emit_records, emit_table, CheckResult, SweepRecord};
