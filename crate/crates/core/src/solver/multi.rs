use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Algorithm, DistanceVector, Solution, SolveError, SolveStats};
use crate::graph::CsrGraph;

/// Sums of per-source counters plus means over sources that reached at
/// least one other node.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct AggregateStats {
    pub sources: u64,
    /// Sources with `first_discoveries >= 1`.
    pub reachable_sources: u64,
    pub outer_steps: u64,
    pub max_outer_steps: u64,
    pub relaxations: u64,
    pub writes: u64,
    pub first_discoveries: u64,
    pub re_updates: u64,
    pub mean_mu: f64,
    pub mean_updated_ratio: f64,
    /// Sources whose solve flagged a negative cycle.
    pub negative_cycles: u64,
}

impl AggregateStats {
    pub fn from_stats<'a>(stats: impl IntoIterator<Item = &'a SolveStats>) -> Self {
        let mut acc = Accumulator::default();
        for s in stats {
            acc.push(s);
        }
        acc.finish()
    }
}

#[derive(Default)]
struct Accumulator {
    agg: AggregateStats,
    mu_sum: f64,
    ratio_sum: f64,
}

impl Accumulator {
    fn push(&mut self, s: &SolveStats) {
        let a = &mut self.agg;
        a.sources += 1;
        a.outer_steps += s.outer_steps;
        a.max_outer_steps = a.max_outer_steps.max(s.outer_steps);
        a.relaxations += s.relaxations;
        a.writes += s.writes;
        a.first_discoveries += s.first_discoveries;
        a.re_updates += s.re_updates;
        a.negative_cycles += s.negative_cycle as u64;
        if s.first_discoveries > 0 {
            a.reachable_sources += 1;
            self.mu_sum += s.mu;
            self.ratio_sum += s.updated_ratio;
        }
    }

    fn finish(mut self) -> AggregateStats {
        let k = self.agg.reachable_sources;
        if k > 0 {
            self.agg.mean_mu = self.mu_sum / k as f64;
            self.agg.mean_updated_ratio = self.ratio_sum / k as f64;
        }
        self.agg
    }
}

fn check_sources(g: &CsrGraph, sources: &[usize]) -> Result<(), SolveError> {
    match sources.iter().find(|&&s| s >= g.n()) {
        Some(&node) => Err(SolveError::SourceOutOfRange { node, n: g.n() }),
        None => Ok(()),
    }
}

/// Runs `f` over `items` on `workers` threads and returns results in input order.
pub(crate) fn run_parallel<T, R, F>(items: &[T], workers: usize, f: F) -> Result<Vec<R>, SolveError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if workers == 0 {
        return Err(SolveError::NoWorkers);
    }
    if workers == 1 || items.len() <= 1 {
        return Ok(items.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SolveError::Pool(e.to_string()))?;
    Ok(pool.install(|| items.par_iter().map(&f).collect()))
}

/// Independent single-source solves, one per entry of `sources`, returned in
/// the same order. Every source is validated before any work starts.
pub fn mssp(
    g: &CsrGraph,
    sources: &[usize],
    algo: Algorithm,
    workers: usize,
) -> Result<Vec<Solution>, SolveError> {
    check_sources(g, sources)?;
    if workers == 0 {
        return Err(SolveError::NoWorkers);
    }
    run_parallel(sources, workers, |&s| algo.solve(g, s, false))?.into_iter().collect()
}

/// Solves from every node and hands each row to `sink` in ascending source
/// order. At most a small batch of rows is held in memory at once.
pub fn apsp<F, E>(
    g: &CsrGraph,
    algo: Algorithm,
    workers: usize,
    mut sink: F,
) -> Result<AggregateStats, SolveError>
where
    F: FnMut(&DistanceVector) -> Result<(), E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    if workers == 0 {
        return Err(SolveError::NoWorkers);
    }
    let batch = (workers * 4).max(1);
    let pool = if workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| SolveError::Pool(e.to_string()))?,
        )
    } else {
        None
    };

    let mut acc = Accumulator::default();
    let all: Vec<usize> = (0..g.n()).collect();
    for chunk in all.chunks(batch) {
        let solve = |&s: &usize| algo.solve(g, s, false);
        let rows: Vec<Result<Solution, SolveError>> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(solve).collect()),
            None => chunk.iter().map(solve).collect(),
        };
        for row in rows {
            let sol = row?;
            acc.push(&sol.stats);
            sink(&sol.dist).map_err(|e| SolveError::Sink(e.into()))?;
        }
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, Edge, EdgeList};
    use crate::solver::govm_sssp;

    fn three_node() -> CsrGraph {
        let el = EdgeList::new(
            3,
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0), Edge::new(0, 2, 3.0)],
        );
        build_csr(&el).unwrap()
    }

    #[test]
    fn single_source_matches_direct_solve() {
        let g = three_node();
        let rows = mssp(&g, &[1], Algorithm::Govm, 8).unwrap();
        assert_eq!(rows, vec![govm_sssp(&g, 1, false).unwrap()]);
    }

    #[test]
    fn invalid_source_rejected_up_front() {
        let g = three_node();
        assert!(matches!(
            mssp(&g, &[0, 7, 1], Algorithm::Govm, 2),
            Err(SolveError::SourceOutOfRange { node: 7, .. })
        ));
        assert!(matches!(mssp(&g, &[0], Algorithm::Govm, 0), Err(SolveError::NoWorkers)));
    }

    #[test]
    fn apsp_streams_in_order() {
        let g = build_csr(&EdgeList::new(5, vec![])).unwrap();
        let mut seen = Vec::new();
        let agg = apsp(&g, Algorithm::Gsvm, 3, |row| {
            seen.push(row.clone());
            Ok::<_, std::io::Error>(())
        })
        .unwrap();
        assert_eq!(seen.len(), 5);
        for (s, row) in seen.iter().enumerate() {
            assert_eq!(row.source(), s);
            for (j, &d) in row.as_slice().iter().enumerate() {
                assert_eq!(d, if j == s { 0.0 } else { f64::INFINITY });
            }
        }
        assert_eq!(agg.sources, 5);
        assert_eq!(agg.reachable_sources, 0);
        assert_eq!(agg.mean_mu, 0.0);
    }

    #[test]
    fn sink_failure_aborts() {
        let g = three_node();
        let mut calls = 0;
        let err = apsp(&g, Algorithm::Govm, 1, |_| {
            calls += 1;
            if calls == 2 {
                Err(std::io::Error::other("disk full"))
            } else {
                Ok(())
            }
        })
        .unwrap_err();
        assert!(matches!(err, SolveError::Sink(_)));
        assert_eq!(calls, 2);
    }

    #[test]
    fn aggregate_means_skip_isolated_sources() {
        let a = SolveStats { first_discoveries: 2, writes: 3, re_updates: 1, mu: 1.5, ..Default::default() };
        let b = SolveStats::default();
        let agg = AggregateStats::from_stats([&a, &b]);
        assert_eq!(agg.sources, 2);
        assert_eq!(agg.reachable_sources, 1);
        assert_eq!(agg.mean_mu, 1.5);
        assert_eq!(agg.writes, 3);
    }
}
