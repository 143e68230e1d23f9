use super::{seed_observed, NoTrace, Observer, Solution, SolveError, SolverState};
use crate::graph::CsrGraph;

/// Frontier kernel: each step relaxes only the out-edges of nodes written
/// during the previous step.
pub fn govm_sssp(g: &CsrGraph, source: usize, record_pred: bool) -> Result<Solution, SolveError> {
    govm_sssp_observed(g, source, record_pred, &mut NoTrace)
}

pub fn govm_sssp_observed<O: Observer>(
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
            if !st.frontier.current[j] || g.out_degree(j) == 0 {
                continue;
            }
            obs.on_scan(st.step, j);
            let (cols, vals) = g.row(j);
            for (&k, &w) in cols.iter().zip(vals) {
                if st.relax(j, k, w, obs) {
                    st.frontier.next[k] = true;
                    wrote = true;
                }
            }
        }
        if !wrote {
            break;
        }
        st.frontier.advance();
    }
    Ok(st.finish(wrote))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, Edge, EdgeList};
    use crate::solver::gsvm_sssp;

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> CsrGraph {
        build_csr(&EdgeList::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect()))
            .unwrap()
    }

    #[test]
    fn three_node_example_does_less_work() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)]);
        let o = govm_sssp(&g, 0, false).unwrap();
        let s = gsvm_sssp(&g, 0, false).unwrap();
        assert_eq!(o.dist.as_slice(), &[0.0, 1.0, 2.0]);
        assert!(o.stats.relaxations <= s.stats.relaxations);
    }

    #[test]
    fn re_update_counted() {
        // node 1 is discovered at 1.9 and then improved to 0.2 through node 2
        let g = graph(3, &[(0, 1, 1.9), (0, 2, 0.1), (2, 1, 0.1)]);
        let sol = govm_sssp(&g, 0, false).unwrap();
        assert_eq!(sol.dist[1], 0.2);
        assert_eq!(sol.stats.writes, 3);
        assert_eq!(sol.stats.first_discoveries, 2);
        assert_eq!(sol.stats.re_updates, 1);
        assert_eq!(sol.stats.mu, 1.5);
        assert_eq!(sol.stats.updated_ratio, 0.5);
    }

    #[test]
    fn negative_cycle_flag_matches_gsvm() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, -5.0), (2, 1, 1.0)]);
        assert!(govm_sssp(&g, 0, false).unwrap().stats.negative_cycle);
        assert!(gsvm_sssp(&g, 0, false).unwrap().stats.negative_cycle);
    }

    #[test]
    fn non_source_negative_self_loop() {
        let g = graph(2, &[(0, 1, 1.0), (1, 1, -0.5)]);
        let sol = govm_sssp(&g, 0, false).unwrap();
        assert!(sol.stats.negative_cycle);
        assert!(sol.stats.outer_steps <= 2);
    }

    #[test]
    fn zero_weight_cycle_is_not_negative() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 0.0), (2, 1, 0.0)]);
        let sol = govm_sssp(&g, 0, false).unwrap();
        assert!(!sol.stats.negative_cycle);
        assert_eq!(sol.dist.as_slice(), &[0.0, 1.0, 1.0]);
        assert_eq!(sol.stats.mu, 1.0);
    }
}
