use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::report::Tabular;
use super::ExperimentError;
use crate::graph::CsrGraph;
use crate::oracle::{bellman_ford_sssp, dijkstra_sssp, floyd_warshall_apsp, OracleResult};
use crate::solver::{apsp, mssp, run_parallel, Algorithm};

/// Sources whose rows are compared against an oracle before timing starts.
pub const CROSS_CHECK_SOURCES: usize = 16;
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-9;
pub const MIN_REPEATS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchAlgorithm {
    Gsvm,
    Govm,
    Dijkstra,
    BellmanFord,
    Floyd,
}

impl BenchAlgorithm {
    fn as_solver(self) -> Option<Algorithm> {
        match self {
            BenchAlgorithm::Gsvm => Some(Algorithm::Gsvm),
            BenchAlgorithm::Govm => Some(Algorithm::Govm),
            _ => None,
        }
    }
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchAlgorithm::Gsvm => "gsvm",
            BenchAlgorithm::Govm => "govm",
            BenchAlgorithm::Dijkstra => "dijkstra",
            BenchAlgorithm::BellmanFord => "bellman_ford",
            BenchAlgorithm::Floyd => "floyd",
        })
    }
}

impl FromStr for BenchAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "gsvm" => Ok(BenchAlgorithm::Gsvm),
            "govm" => Ok(BenchAlgorithm::Govm),
            "dijkstra" => Ok(BenchAlgorithm::Dijkstra),
            "bellman_ford" | "bf" => Ok(BenchAlgorithm::BellmanFord),
            "floyd" | "floyd_warshall" => Ok(BenchAlgorithm::Floyd),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Task {
    Sssp,
    Mssp,
    Apsp,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Sssp => "SSSP",
            Task::Mssp => "MSSP",
            Task::Apsp => "APSP",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub graph_id: String,
    pub algorithm: BenchAlgorithm,
    pub task: Task,
    /// Ignored for APSP.
    pub sources: Vec<usize>,
    pub workers: usize,
    pub repeats: usize,
    pub floyd_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub graph_id: String,
    pub algorithm: BenchAlgorithm,
    pub task: Task,
    pub workers: usize,
    pub sources: usize,
    /// Median of `times`, seconds.
    pub wall_time: f64,
    /// Relaxations in one repeat.
    pub relaxations: u64,
    pub repeats: usize,
    pub times: Vec<f64>,
    pub cross_check: String,
}

impl Tabular for BenchRecord {
    fn header() -> Vec<&'static str> {
        vec![
            "graph_id",
            "algorithm",
            "task",
            "workers",
            "sources",
            "wall_time",
            "relaxations",
            "repeats",
            "times",
            "cross_check",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.graph_id.clone(),
            self.algorithm.to_string(),
            self.task.to_string(),
            self.workers.to_string(),
            self.sources.to_string(),
            self.wall_time.to_string(),
            self.relaxations.to_string(),
            self.repeats.to_string(),
            self.times.iter().map(f64::to_string).collect::<Vec<_>>().join(";"),
            self.cross_check.clone(),
        ]
    }
}

pub fn median(times: &[f64]) -> f64 {
    let mut t = times.to_vec();
    t.sort_by(f64::total_cmp);
    let mid = t.len() / 2;
    if t.len() % 2 == 1 {
        t[mid]
    } else {
        (t[mid - 1] + t[mid]) / 2.0
    }
}

struct Rows {
    dist: Vec<Vec<f64>>,
    negative_cycle: bool,
}

fn oracle_rows(
    g: &CsrGraph,
    sources: &[usize],
    f: fn(&CsrGraph, usize) -> Result<OracleResult, crate::oracle::OracleError>,
) -> Result<Rows, ExperimentError> {
    let mut rows = Rows { dist: Vec::new(), negative_cycle: false };
    for &s in sources {
        let r = f(g, s)?;
        rows.negative_cycle |= r.negative_cycle;
        rows.dist.push(r.dist.into_vec());
    }
    Ok(rows)
}

fn algorithm_rows(
    g: &CsrGraph,
    algo: BenchAlgorithm,
    sources: &[usize],
    floyd_cap: usize,
) -> Result<Rows, ExperimentError> {
    match algo {
        BenchAlgorithm::Gsvm | BenchAlgorithm::Govm => {
            let solver = algo.as_solver().expect("solver variant");
            let sols = mssp(g, sources, solver, 1)?;
            Ok(Rows {
                negative_cycle: sols.iter().any(|s| s.stats.negative_cycle),
                dist: sols.into_iter().map(|s| s.dist.into_vec()).collect(),
            })
        }
        BenchAlgorithm::Dijkstra => oracle_rows(g, sources, dijkstra_sssp),
        BenchAlgorithm::BellmanFord => oracle_rows(g, sources, bellman_ford_sssp),
        BenchAlgorithm::Floyd => {
            let fw = floyd_warshall_apsp(g, floyd_cap)?;
            Ok(Rows {
                negative_cycle: fw.negative_cycle,
                dist: sources.iter().map(|&s| fw.row(s).to_vec()).collect(),
            })
        }
    }
}

/// Compares the first few rows of `algo` against an independent oracle.
fn cross_check(
    g: &CsrGraph,
    algo: BenchAlgorithm,
    sources: &[usize],
    floyd_cap: usize,
    non_negative: bool,
) -> Result<String, ExperimentError> {
    let check: Vec<usize> = sources.iter().copied().take(CROSS_CHECK_SOURCES).collect();
    if check.is_empty() {
        return Ok("skipped: no sources".into());
    }
    let oracle = match (algo, non_negative) {
        (BenchAlgorithm::Dijkstra, _) => BenchAlgorithm::BellmanFord,
        (BenchAlgorithm::BellmanFord, true) => BenchAlgorithm::Dijkstra,
        (BenchAlgorithm::BellmanFord, false) => BenchAlgorithm::Govm,
        (_, true) => BenchAlgorithm::Dijkstra,
        (_, false) => BenchAlgorithm::BellmanFord,
    };
    let got = algorithm_rows(g, algo, &check, floyd_cap)?;
    let want = algorithm_rows(g, oracle, &check, floyd_cap)?;
    if want.negative_cycle || got.negative_cycle {
        if algo == BenchAlgorithm::Floyd {
            // whole-graph verdict; per-source verdicts need not agree
            return Ok(format!("skipped: negative cycle (oracle {oracle})"));
        }
        if want.negative_cycle != got.negative_cycle {
            return Err(ExperimentError::CrossCheck(format!(
                "{algo} negative-cycle verdict {} disagrees with {oracle}",
                got.negative_cycle
            )));
        }
        return Ok(format!("skipped: negative cycle (oracle {oracle})"));
    }
    for ((s, a), b) in check.iter().zip(&got.dist).zip(&want.dist) {
        for (j, (x, y)) in a.iter().zip(b).enumerate() {
            let same = (x.is_infinite() && x == y) || (x - y).abs() <= CROSS_CHECK_TOLERANCE;
            if !same {
                return Err(ExperimentError::CrossCheck(format!(
                    "{algo} gives d({s}, {j}) = {x}, {oracle} gives {y}"
                )));
            }
        }
    }
    Ok(format!("ok: {} rows vs {oracle}", check.len()))
}

fn run_once(g: &CsrGraph, cfg: &BenchConfig, sources: &[usize]) -> Result<u64, ExperimentError> {
    match cfg.algorithm {
        BenchAlgorithm::Gsvm | BenchAlgorithm::Govm => {
            let solver = cfg.algorithm.as_solver().expect("solver variant");
            if cfg.task == Task::Apsp {
                let agg = apsp(g, solver, cfg.workers, |_| Ok::<_, std::io::Error>(()))?;
                Ok(agg.relaxations)
            } else {
                let sols = mssp(g, sources, solver, cfg.workers)?;
                Ok(sols.iter().map(|s| s.stats.relaxations).sum())
            }
        }
        BenchAlgorithm::Dijkstra | BenchAlgorithm::BellmanFord => {
            let f = if cfg.algorithm == BenchAlgorithm::Dijkstra { dijkstra_sssp } else { bellman_ford_sssp };
            let results = run_parallel(sources, cfg.workers, |&s| f(g, s).map(|r| r.relaxations))?;
            let mut total = 0;
            for r in results {
                total += r?;
            }
            Ok(total)
        }
        BenchAlgorithm::Floyd => {
            floyd_warshall_apsp(g, cfg.floyd_cap)?;
            let n = g.n() as u64;
            Ok(n * n * n)
        }
    }
}

/// Times `repeats` runs of one algorithm/task pairing after a single
/// untimed cross-check against an oracle.
pub fn run_benchmark(g: &CsrGraph, cfg: &BenchConfig) -> Result<BenchRecord, ExperimentError> {
    if cfg.repeats < MIN_REPEATS {
        return Err(ExperimentError::Invalid(format!(
            "repeats must be at least {MIN_REPEATS}, got {}",
            cfg.repeats
        )));
    }
    if cfg.workers == 0 {
        return Err(ExperimentError::Invalid("workers must be at least 1".into()));
    }
    let non_negative = g.first_negative_edge().is_none();
    if cfg.algorithm == BenchAlgorithm::Dijkstra {
        if let Some(e) = g.first_negative_edge() {
            return Err(ExperimentError::Incompatible(format!(
                "dijkstra cannot run on negative weights (edge ({}, {}) = {})",
                e.u, e.v, e.w
            )));
        }
    }
    if cfg.algorithm == BenchAlgorithm::Floyd && g.n() > cfg.floyd_cap {
        return Err(ExperimentError::Incompatible(format!(
            "floyd is capped at {} nodes, graph has {}",
            cfg.floyd_cap,
            g.n()
        )));
    }
    let sources: Vec<usize> = match cfg.task {
        Task::Apsp => (0..g.n()).collect(),
        Task::Sssp if cfg.sources.len() != 1 => {
            return Err(ExperimentError::Invalid("SSSP takes exactly one source".into()));
        }
        _ => cfg.sources.clone(),
    };
    if let Some(&s) = sources.iter().find(|&&s| s >= g.n()) {
        return Err(ExperimentError::Invalid(format!("source {s} out of range")));
    }

    let check = cross_check(g, cfg.algorithm, &sources, cfg.floyd_cap, non_negative)?;

    let mut times = Vec::with_capacity(cfg.repeats);
    let mut relaxations = 0;
    for _ in 0..cfg.repeats {
        let start = Instant::now();
        relaxations = run_once(g, cfg, &sources)?;
        times.push(start.elapsed().as_secs_f64());
    }
    Ok(BenchRecord {
        graph_id: cfg.graph_id.clone(),
        algorithm: cfg.algorithm,
        task: cfg.task,
        workers: cfg.workers,
        sources: sources.len(),
        wall_time: median(&times),
        relaxations,
        repeats: cfg.repeats,
        times,
        cross_check: check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_random_graph, WeightMode};

    fn cfg(algorithm: BenchAlgorithm, task: Task, sources: Vec<usize>) -> BenchConfig {
        BenchConfig {
            graph_id: "g".into(),
            algorithm,
            task,
            sources,
            workers: 1,
            repeats: 3,
            floyd_cap: 2000,
        }
    }

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn record_carries_repeat_times() {
        let g = generate_random_graph(30, 3.0, WeightMode::Unit, 1).unwrap().graph;
        let rec = run_benchmark(&g, &cfg(BenchAlgorithm::Govm, Task::Sssp, vec![0])).unwrap();
        assert_eq!(rec.times.len(), 3);
        assert_eq!(rec.wall_time, median(&rec.times));
        assert!(rec.cross_check.starts_with("ok"));
    }

    #[test]
    fn every_algorithm_cross_checks() {
        let mode = WeightMode::RandomUniform { lo: 0.0, hi: 2.0, seed: 3 };
        let g = generate_random_graph(40, 4.0, mode, 2).unwrap().graph;
        for algo in [
            BenchAlgorithm::Gsvm,
            BenchAlgorithm::Govm,
            BenchAlgorithm::Dijkstra,
            BenchAlgorithm::BellmanFord,
            BenchAlgorithm::Floyd,
        ] {
            let rec = run_benchmark(&g, &cfg(algo, Task::Apsp, vec![])).unwrap();
            assert_eq!(rec.sources, 40);
            assert!(rec.cross_check.starts_with("ok"), "{algo}: {}", rec.cross_check);
        }
    }

    #[test]
    fn incompatible_pairings_rejected() {
        let mode = WeightMode::RandomUniform { lo: -1.0, hi: 1.0, seed: 3 };
        let g = generate_random_graph(20, 2.0, mode, 2).unwrap().graph;
        assert!(matches!(
            run_benchmark(&g, &cfg(BenchAlgorithm::Dijkstra, Task::Sssp, vec![0])),
            Err(ExperimentError::Incompatible(_))
        ));
        let mut c = cfg(BenchAlgorithm::Floyd, Task::Apsp, vec![]);
        c.floyd_cap = 10;
        assert!(matches!(run_benchmark(&g, &c), Err(ExperimentError::Incompatible(_))));
        let mut c = cfg(BenchAlgorithm::Govm, Task::Sssp, vec![0]);
        c.repeats = 2;
        assert!(matches!(run_benchmark(&g, &c), Err(ExperimentError::Invalid(_))));
    }

    #[test]
    fn govm_does_less_work_than_gsvm() {
        let mode = WeightMode::RandomUniform { lo: 0.0, hi: 2.0, seed: 8 };
        let g = generate_random_graph(300, 8.0, mode, 5).unwrap().graph;
        let srcs: Vec<usize> = (0..10).collect();
        let o = run_benchmark(&g, &cfg(BenchAlgorithm::Govm, Task::Mssp, srcs.clone())).unwrap();
        let s = run_benchmark(&g, &cfg(BenchAlgorithm::Gsvm, Task::Mssp, srcs)).unwrap();
        assert!(o.relaxations <= s.relaxations);
    }
}
