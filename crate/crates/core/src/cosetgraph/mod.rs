//! Graphs, coset graphs `Cos(G, H, HgH)` and quotient graphs.

pub mod builders;
mod coset;
mod graph;
mod quotient;

pub use coset::{coset_graph, CosetTable, DEFAULT_VERTEX_CAP};
pub use graph::Graph;
pub use quotient::{quotient_graph, Quotient, QuotientDiagnostics};
