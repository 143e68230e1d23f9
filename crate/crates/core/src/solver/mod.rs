//! Weighted DAWN single-source solvers and the multi-source drivers built on them.
//!
//! Both kernels start from [`seed_source`], which writes the source's direct
//! out-neighbours into the distance vector and counts as step 1. Each further
//! step relaxes out-edges in place and the loop stops at the first step that
//! writes nothing, or once `step == n`.
//!
//! * [`gsvm_sssp`] rescans every node with a finite distance on each step.
//! * [`govm_sssp`] rescans only the nodes written during the previous step.
//!
//! A step budget exhausted while still writing means a negative cycle is
//! reachable from the source. So does any edge that would lower the pinned
//! source distance below zero; the source itself is never rewritten.

mod govm;
mod gsvm;
mod multi;
mod trace;

pub use govm::{govm_sssp, govm_sssp_observed};
pub use gsvm::{gsvm_sssp, gsvm_sssp_observed};
pub use multi::{apsp, mssp, AggregateStats};
pub(crate) use multi::run_parallel;
pub use trace::{NoTrace, Observer, Trace, TraceEvent};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::CsrGraph;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("source {node} is out of range for a graph with {n} nodes")]
    SourceOutOfRange { node: usize, n: usize },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("failed to start worker pool: {0}")]
    Pool(String),
    #[error("row sink failed: {0}")]
    Sink(Box<dyn std::error::Error + Send + Sync>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Gsvm,
    Govm,
}

impl Algorithm {
    pub fn solve(
        self,
        g: &CsrGraph,
        source: usize,
        record_pred: bool,
    ) -> Result<Solution, SolveError> {
        match self {
            Algorithm::Gsvm => gsvm_sssp(g, source, record_pred),
            Algorithm::Govm => govm_sssp(g, source, record_pred),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Gsvm => "gsvm",
            Algorithm::Govm => "govm",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gsvm" => Ok(Algorithm::Gsvm),
            "govm" => Ok(Algorithm::Govm),
            other => Err(format!("unknown solver `{other}`")),
        }
    }
}

/// Tentative distances from one source; `+inf` marks unreachable nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceVector {
    source: usize,
    dist: Vec<f64>,
}

impl DistanceVector {
    pub fn new(source: usize, dist: Vec<f64>) -> Self {
        Self { source, dist }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.dist
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn is_reachable(&self, j: usize) -> bool {
        self.dist[j].is_finite()
    }

    /// `source,d0,d1,...` with `inf` for unreachable nodes and shortest
    /// round-trip formatting for everything else.
    pub fn to_row(&self) -> String {
        let mut row = self.source.to_string();
        for d in &self.dist {
            row.push(',');
            row.push_str(&format_distance(*d));
        }
        row
    }
}

impl std::ops::Index<usize> for DistanceVector {
    type Output = f64;

    fn index(&self, j: usize) -> &f64 {
        &self.dist[j]
    }
}

pub fn format_distance(d: f64) -> String {
    if d == f64::INFINITY {
        "inf".to_string()
    } else if d == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        d.to_string()
    }
}

/// `pred[j]` is the node whose relaxation last wrote `dist[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PredecessorVector {
    source: usize,
    pred: Vec<Option<usize>>,
}

impl PredecessorVector {
    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.pred
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Nodes from `source` to `target`, or `None` if `target` has no predecessor
    /// chain back to the source.
    pub fn path_to(&self, target: usize) -> Option<Vec<usize>> {
        let mut path = vec![target];
        let mut cur = target;
        while cur != self.source {
            cur = self.pred[cur]?;
            path.push(cur);
            if path.len() > self.pred.len() {
                return None;
            }
        }
        path.reverse();
        Some(path)
    }
}

/// The two frontier vectors: `current` is scanned this step, `next`
/// collects the nodes written during it.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierFlags {
    pub current: Vec<bool>,
    pub next: Vec<bool>,
}

impl FrontierFlags {
    pub fn new(n: usize) -> Self {
        Self { current: vec![false; n], next: vec![false; n] }
    }

    /// Promotes `next` to `current` and clears `next`.
    pub fn advance(&mut self) {
        std::mem::swap(&mut self.current, &mut self.next);
        self.next.fill(false);
    }
}

/// Per-solve counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Final value of the step counter (seeding is step 1).
    pub outer_steps: u64,
    /// Executions of the relaxation comparison.
    pub relaxations: u64,
    /// Assignments to the distance vector.
    pub writes: u64,
    /// Nodes whose distance left `+inf`.
    pub first_discoveries: u64,
    pub re_updates: u64,
    /// `writes / max(first_discoveries, 1)`.
    pub mu: f64,
    /// Fraction of discovered nodes written at least twice.
    pub updated_ratio: f64,
    pub negative_cycle: bool,
}

impl SolveStats {
    /// Flat `(key, value)` record in a fixed key order.
    pub fn to_record(&self) -> Vec<(&'static str, String)> {
        vec![
            ("outer_steps", self.outer_steps.to_string()),
            ("relaxations", self.relaxations.to_string()),
            ("writes", self.writes.to_string()),
            ("first_discoveries", self.first_discoveries.to_string()),
            ("re_updates", self.re_updates.to_string()),
            ("mu", self.mu.to_string()),
            ("updated_ratio", self.updated_ratio.to_string()),
            ("negative_cycle", self.negative_cycle.to_string()),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub dist: DistanceVector,
    pub pred: Option<PredecessorVector>,
    pub stats: SolveStats,
}

/// Mutable state of one solve: the distance vector, frontier flags and the
/// bookkeeping behind [`SolveStats`].
#[derive(Debug, Clone)]
pub struct SolverState {
    source: usize,
    dist: Vec<f64>,
    frontier: FrontierFlags,
    pred: Option<Vec<Option<usize>>>,
    node_writes: Vec<u32>,
    step: u64,
    relaxations: u64,
    writes: u64,
    first_discoveries: u64,
    source_improvable: bool,
}

impl SolverState {
    /// All distances `+inf` except `dist[source] = 0`, frontier empty.
    pub fn new(g: &CsrGraph, source: usize, record_pred: bool) -> Result<Self, SolveError> {
        let n = g.n();
        if source >= n {
            return Err(SolveError::SourceOutOfRange { node: source, n });
        }
        let mut dist = vec![f64::INFINITY; n];
        dist[source] = 0.0;
        Ok(Self {
            source,
            dist,
            frontier: FrontierFlags::new(n),
            pred: record_pred.then(|| vec![None; n]),
            node_writes: vec![0; n],
            step: 0,
            relaxations: 0,
            writes: 0,
            first_discoveries: 0,
            source_improvable: false,
        })
    }

    pub fn dist(&self) -> &[f64] {
        &self.dist
    }

    pub fn frontier(&self) -> &FrontierFlags {
        &self.frontier
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn writes(&self) -> u64 {
        self.writes
    }

    pub fn first_discoveries(&self) -> u64 {
        self.first_discoveries
    }

    pub fn relaxations(&self) -> u64 {
        self.relaxations
    }

    /// One execution of the relaxation test for edge `from -> to`.
    /// Returns whether `dist[to]` was written.
    #[inline]
    fn relax<O: Observer>(&mut self, from: usize, to: usize, w: f64, obs: &mut O) -> bool {
        self.relaxations += 1;
        let candidate = self.dist[from] + w;
        let old = self.dist[to];
        if old > candidate {
            if to == self.source {
                self.source_improvable = true;
                return false;
            }
            debug_assert!(candidate < old, "distance increased at node {to}");
            self.dist[to] = candidate;
            if old == f64::INFINITY {
                self.first_discoveries += 1;
            }
            self.writes += 1;
            self.node_writes[to] = self.node_writes[to].saturating_add(1);
            if let Some(pred) = self.pred.as_mut() {
                pred[to] = Some(from);
            }
            obs.on_write(self.step, from, to, old, candidate);
            return true;
        }
        false
    }

    /// Builds the final solution. `exhausted` means the last permitted step
    /// still wrote.
    fn finish(self, exhausted: bool) -> Solution {
        let fd = self.first_discoveries;
        let multi = self.node_writes.iter().filter(|&&c| c >= 2).count() as f64;
        let stats = SolveStats {
            outer_steps: self.step,
            relaxations: self.relaxations,
            writes: self.writes,
            first_discoveries: fd,
            re_updates: self.writes - fd,
            mu: self.writes as f64 / fd.max(1) as f64,
            updated_ratio: multi / fd.max(1) as f64,
            negative_cycle: exhausted || self.source_improvable,
        };
        Solution {
            dist: DistanceVector::new(self.source, self.dist),
            pred: self.pred.map(|pred| PredecessorVector { source: self.source, pred }),
            stats,
        }
    }
}

/// Step 1: relaxes the source's own out-edges and puts every written node
/// on the current frontier.
pub fn seed_source(g: &CsrGraph, state: &mut SolverState) {
    seed_observed(g, state, &mut NoTrace);
}

fn seed_observed<O: Observer>(g: &CsrGraph, state: &mut SolverState, obs: &mut O) {
    state.step = 1;
    obs.on_step(1);
    let source = state.source;
    let (cols, vals) = g.row(source);
    for (&j, &w) in cols.iter().zip(vals) {
        if state.relax(source, j, w, obs) {
            state.frontier.current[j] = true;
        }
    }
}
