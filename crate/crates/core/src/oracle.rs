//! Classical reference solvers used to check the DAWN kernels and as
//! benchmark baselines.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{CsrGraph, Edge};
use crate::solver::DistanceVector;

/// Largest graph [`floyd_warshall_apsp`] accepts unless told otherwise.
pub const DEFAULT_FLOYD_CAP: usize = 2000;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("source {node} is out of range for a graph with {n} nodes")]
    SourceOutOfRange { node: usize, n: usize },
    #[error("Dijkstra requires non-negative weights; edge ({u}, {v}) has weight {w}")]
    NegativeWeight { u: usize, v: usize, w: f64 },
    #[error("graph has {n} nodes, above the Floyd-Warshall cap of {cap}; use a per-source oracle")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub dist: DistanceVector,
    /// Only Bellman-Ford ever sets this.
    pub negative_cycle: bool,
    pub relaxations: u64,
}

fn check_source(g: &CsrGraph, source: usize) -> Result<(), OracleError> {
    if source >= g.n() {
        return Err(OracleError::SourceOutOfRange { node: source, n: g.n() });
    }
    Ok(())
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed for a min-heap
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Binary-heap Dijkstra with lazy deletion.
pub fn dijkstra_sssp(g: &CsrGraph, source: usize) -> Result<OracleResult, OracleError> {
    check_source(g, source)?;
    if let Some(Edge { u, v, w }) = g.first_negative_edge() {
        return Err(OracleError::NegativeWeight { u, v, w });
    }
    let mut dist = vec![f64::INFINITY; g.n()];
    let mut done = vec![false; g.n()];
    let mut relaxations = 0;
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Entry(0.0, source));
    while let Some(Entry(d, u)) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for (v, w) in g.neighbors(u) {
            relaxations += 1;
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Entry(nd, v));
            }
        }
    }
    Ok(OracleResult { dist: DistanceVector::new(source, dist), negative_cycle: false, relaxations })
}

/// Bellman-Ford relaxing edges in CSR order. Stops early once a pass changes
/// nothing; otherwise an `n`-th pass decides whether a negative cycle is
/// reachable.
pub fn bellman_ford_sssp(g: &CsrGraph, source: usize) -> Result<OracleResult, OracleError> {
    check_source(g, source)?;
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    let mut relaxations = 0u64;
    let mut pass = |dist: &mut [f64]| {
        let mut changed = false;
        for u in 0..n {
            if !dist[u].is_finite() {
                continue;
            }
            for (v, w) in g.neighbors(u) {
                relaxations += 1;
                let nd = dist[u] + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    changed = true;
                }
            }
        }
        changed
    };
    let mut settled = false;
    for _ in 1..n {
        if !pass(&mut dist) {
            settled = true;
            break;
        }
    }
    let negative_cycle = !settled && pass(&mut dist);
    Ok(OracleResult { dist: DistanceVector::new(source, dist), negative_cycle, relaxations })
}

/// Dense all-pairs distances, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FloydResult {
    pub n: usize,
    pub dist: Vec<f64>,
    /// Some diagonal entry went negative.
    pub negative_cycle: bool,
}

impl FloydResult {
    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }
}

pub fn floyd_warshall_apsp(g: &CsrGraph, cap: usize) -> Result<FloydResult, OracleError> {
    let n = g.n();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let mut d = vec![f64::INFINITY; n * n];
    for i in 0..n {
        d[i * n + i] = 0.0;
    }
    for e in g.edges() {
        let cell = &mut d[e.u * n + e.v];
        if e.w < *cell {
            *cell = e.w;
        }
    }
    for k in 0..n {
        let row_k = d[k * n..(k + 1) * n].to_vec();
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == f64::INFINITY {
                continue;
            }
            let row_i = &mut d[i * n..(i + 1) * n];
            for (cell, &dkj) in row_i.iter_mut().zip(&row_k) {
                let cand = dik + dkj;
                if cand < *cell {
                    *cell = cand;
                }
            }
        }
    }
    let negative_cycle = (0..n).any(|i| d[i * n + i] < 0.0);
    Ok(FloydResult { n, dist: d, negative_cycle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, EdgeList};

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> CsrGraph {
        build_csr(&EdgeList::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect()))
            .unwrap()
    }

    fn three_node() -> CsrGraph {
        graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)])
    }

    #[test]
    fn dijkstra_examples() {
        assert_eq!(dijkstra_sssp(&three_node(), 0).unwrap().dist.as_slice(), &[0.0, 1.0, 2.0]);
        assert_eq!(dijkstra_sssp(&graph(1, &[]), 0).unwrap().dist.as_slice(), &[0.0]);
        assert_eq!(
            dijkstra_sssp(&graph(2, &[(1, 0, -0.5)]), 0),
            Err(OracleError::NegativeWeight { u: 1, v: 0, w: -0.5 })
        );
    }

    #[test]
    fn bellman_ford_examples() {
        let g = graph(3, &[(0, 1, 2.0), (0, 2, 5.0), (1, 2, -4.0)]);
        let r = bellman_ford_sssp(&g, 0).unwrap();
        assert_eq!(r.dist.as_slice(), &[0.0, 2.0, -2.0]);
        assert!(!r.negative_cycle);

        let cyc = graph(3, &[(0, 1, 1.0), (1, 2, -5.0), (2, 1, 1.0)]);
        assert!(bellman_ford_sssp(&cyc, 0).unwrap().negative_cycle);
        // the cycle 1 -> 2 -> 1 is reachable from 2 as well
        assert!(bellman_ford_sssp(&cyc, 2).unwrap().negative_cycle);

        let r = bellman_ford_sssp(&graph(3, &[]), 1).unwrap();
        assert_eq!(r.dist.as_slice(), &[f64::INFINITY, 0.0, f64::INFINITY]);
    }

    #[test]
    fn bellman_ford_source_cycle_lowers_source() {
        let r = bellman_ford_sssp(&graph(2, &[(0, 1, 1.0), (1, 0, -3.0)]), 0).unwrap();
        assert!(r.negative_cycle);
    }

    #[test]
    fn floyd_examples() {
        let r = floyd_warshall_apsp(&three_node(), DEFAULT_FLOYD_CAP).unwrap();
        assert_eq!(r.row(0), &[0.0, 1.0, 2.0]);
        assert!((0..3).all(|i| r.row(i)[i] == 0.0));
        assert!(!r.negative_cycle);

        let cyc = graph(3, &[(0, 1, 1.0), (1, 2, -5.0), (2, 1, 1.0)]);
        let r = floyd_warshall_apsp(&cyc, DEFAULT_FLOYD_CAP).unwrap();
        assert!(r.negative_cycle);
        assert!(r.row(1)[1] < 0.0 && r.row(2)[2] < 0.0);
        assert_eq!(r.row(0)[0], 0.0);

        assert_eq!(
            floyd_warshall_apsp(&graph(5, &[]), 4),
            Err(OracleError::TooLarge { n: 5, cap: 4 })
        );
    }
}
