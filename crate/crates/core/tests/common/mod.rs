#![allow(dead_code)]

use dawn::graph::{build_csr, generate_random_graph, CsrGraph, Edge, EdgeList, WeightMode};
use dawn::oracle::bellman_ford_sssp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

pub fn graph(n: usize, edges: &[(usize, usize, f64)]) -> CsrGraph {
    build_csr(&EdgeList::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect())).unwrap()
}

pub fn three_node() -> CsrGraph {
    graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)])
}

pub fn negative_cycle_fixture() -> CsrGraph {
    graph(3, &[(0, 1, 1.0), (1, 2, -5.0), (2, 1, 1.0)])
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn same(a: f64, b: f64) -> bool {
    (a.is_infinite() && a == b) || (a - b).abs() <= TOL
}

pub fn rows_match(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| same(x, y))
}

pub fn random_graph(n: usize, avg_degree: f64, mode: WeightMode, seed: u64) -> CsrGraph {
    generate_random_graph(n, avg_degree, mode, seed).unwrap().graph
}

/// Random structure with weights `w + phi(u) - phi(v)`, `w ~ U[0,2)`,
/// `phi ~ U[0,1)`. Edges can be negative but every cycle keeps its
/// non-negative original weight.
pub fn potential_graph(n: usize, avg_degree: f64, seed: u64) -> CsrGraph {
    let base = random_graph(n, avg_degree, WeightMode::RandomUniform { lo: 0.0, hi: 2.0, seed }, seed);
    let mut r = rng(seed ^ 0x9e37_79b9);
    let phi: Vec<f64> = (0..n).map(|_| r.gen::<f64>()).collect();
    let edges = base.edges().map(|e| Edge::new(e.u, e.v, e.w + phi[e.u] - phi[e.v])).collect();
    build_csr(&EdgeList::new(n, edges)).unwrap()
}

/// Acyclic graph with weights in `[-1, 2)` whose topological order is a
/// random permutation of the node ids.
pub fn permuted_dag(n: usize, avg_degree: f64, seed: u64) -> CsrGraph {
    let mut r = rng(seed);
    let mut rank: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        rank.swap(i, r.gen_range(0..=i));
    }
    let p = if n > 1 { (2.0 * avg_degree / (n - 1) as f64).min(1.0) } else { 0.0 };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rank[u] < rank[v] && r.gen::<f64>() < p {
                edges.push(Edge::new(u, v, r.gen_range(-1.0..2.0)));
            }
        }
    }
    build_csr(&EdgeList::new(n, edges)).unwrap()
}

/// Nodes reachable from `s`, in ascending order.
pub fn reachable(g: &CsrGraph, s: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        for (v, _) in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..g.n()).filter(|&v| seen[v]).collect()
}

/// Adds one negative cycle through 1..=4 nodes reachable from `source`.
pub fn inject_negative_cycle(g: &CsrGraph, source: usize, seed: u64) -> CsrGraph {
    let mut r = rng(seed);
    let pool = reachable(g, source);
    let k = r.gen_range(1..=4usize).min(pool.len());
    let mut picked = Vec::new();
    while picked.len() < k {
        let c = pool[r.gen_range(0..pool.len())];
        if !picked.contains(&c) {
            picked.push(c);
        }
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    let mut total = 0.0;
    for i in 0..k - 1 {
        let w = r.gen_range(0.0..2.0);
        total += w;
        edges.push(Edge::new(picked[i], picked[i + 1], w));
    }
    let closing = -total - r.gen_range(0.1..1.0);
    edges.push(Edge::new(picked[k - 1], picked[0], closing));
    build_csr(&EdgeList::new(g.n(), edges)).unwrap()
}

/// True when no source reaches a negative cycle.
pub fn globally_cycle_free(g: &CsrGraph) -> bool {
    (0..g.n()).all(|s| !bellman_ford_sssp(g, s).unwrap().negative_cycle)
}

/// Exhaustive minimum over all simple paths; tiny graphs only.
pub fn brute_force_sssp(g: &CsrGraph, s: usize) -> Vec<f64> {
    fn dfs(g: &CsrGraph, u: usize, acc: f64, on_path: &mut Vec<bool>, best: &mut Vec<f64>) {
        if acc < best[u] {
            best[u] = acc;
        }
        for (v, w) in g.neighbors(u) {
            if !on_path[v] {
                on_path[v] = true;
                dfs(g, v, acc + w, on_path, best);
                on_path[v] = false;
            }
        }
    }
    let mut best = vec![f64::INFINITY; g.n()];
    let mut on_path = vec![false; g.n()];
    on_path[s] = true;
    dfs(g, s, 0.0, &mut on_path, &mut best);
    best
}

/// Complete directed graph with random weights; a fixture where the
/// frontier kernel scans far fewer rows.
pub fn dense_fixture() -> CsrGraph {
    random_graph(60, 59.0, WeightMode::RandomUniform { lo: 0.0, hi: 2.0, seed: 17 }, 17)
}
