use super::{seed_observed, NoTrace, Observer, Solution, SolveError, SolverState};
use crate::graph::CsrGraph;

/// Full-rescan kernel: every step relaxes the out-edges of every node whose
/// distance is finite at the moment it is visited.
pub fn gsvm_sssp(g: &CsrGraph, source: usize, record_pred: bool) -> Result<Solution, SolveError> {
    gsvm_sssp_observed(g, source, record_pred, &mut NoTrace)
}

pub fn gsvm_sssp_observed<O: Observer>(
    g: &CsrGraph,
    source: usize,
    record_pred: bool,
    obs: &mut O,
) -> Result<Solution, SolveError> {
    let mut st = SolverState::new(g, source, record_pred)?;
    seed_observed(g, &mut st, obs);

    let n = g.n() as u64;
    let mut wrote = false;
    while st.step < n {
        st.step += 1;
        obs.on_step(st.step);
        wrote = false;
        for j in 0..g.n() {
            if !st.dist[j].is_finite() || g.out_degree(j) == 0 {
                continue;
            }
            obs.on_scan(st.step, j);
            let (cols, vals) = g.row(j);
            for (&k, &w) in cols.iter().zip(vals) {
                wrote |= st.relax(j, k, w, obs);
            }
        }
        if !wrote {
            break;
        }
    }
    Ok(st.finish(wrote))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, Edge, EdgeList};

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> CsrGraph {
        build_csr(&EdgeList::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect()))
            .unwrap()
    }

    #[test]
    fn three_node_example() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)]);
        let sol = gsvm_sssp(&g, 0, true).unwrap();
        assert_eq!(sol.dist.as_slice(), &[0.0, 1.0, 2.0]);
        assert!(!sol.stats.negative_cycle);
        assert_eq!(sol.pred.unwrap().path_to(2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn single_node() {
        let sol = gsvm_sssp(&graph(1, &[]), 0, false).unwrap();
        assert_eq!(sol.dist.as_slice(), &[0.0]);
        assert_eq!(sol.stats.outer_steps, 1);
        assert_eq!(sol.stats.writes, 0);
        assert_eq!(sol.stats.mu, 0.0);
    }

    #[test]
    fn reachable_negative_cycle_is_flagged() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, -5.0), (2, 1, 1.0)]);
        let sol = gsvm_sssp(&g, 0, false).unwrap();
        assert!(sol.stats.negative_cycle);
        assert_eq!(sol.stats.outer_steps, 3);
    }

    #[test]
    fn unreachable_negative_cycle_is_ignored() {
        let g = graph(4, &[(0, 1, 1.0), (2, 3, -5.0), (3, 2, 1.0)]);
        let sol = gsvm_sssp(&g, 0, false).unwrap();
        assert!(!sol.stats.negative_cycle);
        assert_eq!(sol.dist.as_slice()[..2], [0.0, 1.0]);
    }

    #[test]
    fn cycle_through_source_keeps_source_pinned() {
        let g = graph(2, &[(0, 1, 1.0), (1, 0, -3.0)]);
        let sol = gsvm_sssp(&g, 0, false).unwrap();
        assert_eq!(sol.dist.as_slice(), &[0.0, 1.0]);
        assert!(sol.stats.negative_cycle);
    }

    #[test]
    fn negative_source_self_loop() {
        let sol = gsvm_sssp(&graph(1, &[(0, 0, -1.0)]), 0, false).unwrap();
        assert_eq!(sol.dist.as_slice(), &[0.0]);
        assert!(sol.stats.negative_cycle);
    }
}
