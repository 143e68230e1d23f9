//! μ experiment, benchmark timing, and CSV/JSON reports.

mod bench;
mod mu;
mod report;

pub use bench::{
    median, run_benchmark, BenchAlgorithm, BenchConfig, BenchRecord, Task, CROSS_CHECK_SOURCES,
    MIN_REPEATS,
};
pub use mu::{
    run_mu_experiment, MuExperiment, MuReport, MuSample, DEFAULT_MU_SOURCES, RANDOM_WEIGHT_HI,
    RANDOM_WEIGHT_LO,
};
pub use report::{read_json_report, write_report, ReportError, ReportFormat, Tabular};

use thiserror::Error;

use crate::graph::GraphError;
use crate::oracle::OracleError;
use crate::solver::SolveError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("{0}")]
    Invalid(String),
    #[error("incompatible algorithm and graph: {0}")]
    Incompatible(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
