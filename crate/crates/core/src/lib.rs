//! Weighted DAWN shortest paths over CSR graphs.
//!
//! * [`graph`]: edge-list and MatrixMarket loaders, CSR construction, weight
//!   rewriting and a seeded random-graph generator.
//! * [`solver`]: the full-rescan (GSVM) and frontier (GOVM) kernels, negative
//!   cycle detection, path-update statistics and multi-source drivers.
//! * [`oracle`]: Dijkstra, Bellman-Ford and Floyd-Warshall references.
//! * [`experiment`]: the μ experiment, benchmark timing and reports.
//! * [`cli`]: argument parsing and command dispatch for the `dawn` binary.

pub mod cli;
pub mod experiment;
pub mod graph;
pub mod oracle;
pub mod solver;

pub use graph::{build_csr, CsrGraph, Edge, EdgeList, WeightMode};
pub use solver::{govm_sssp, gsvm_sssp, Algorithm, DistanceVector, Solution, SolveStats};
