//! Graph ingestion and the CSR adjacency used by every solver.
//!
//! Node ids are dense and 0-based. Weights are `f64` and always finite.
//! Duplicate edges and self-loops are kept as-is; relaxation picks the
//! cheapest duplicate on its own.

mod generate;
mod io;

pub use generate::{generate_random_graph, RandomGraph};
pub use io::{
    load_edge_list, load_edge_list_str, load_matrix_market, load_matrix_market_str,
    write_edge_list, write_matrix_market,
};

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: non-finite weight `{token}`")]
    NonFiniteWeight { line: usize, token: String },
    #[error("unsupported MatrixMarket format: {0}")]
    UnsupportedFormat(String),
    #[error("edge ({u}, {v}) references a node outside [0, {n})")]
    NodeOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) has non-finite weight {w}")]
    InvalidWeight { u: usize, v: usize, w: f64 },
    #[error("invalid weight range [{lo}, {hi})")]
    InvalidRange { lo: f64, hi: f64 },
    #[error("malformed CSR arrays: {0}")]
    MalformedCsr(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize, w: f64) -> Self {
        Self { u, v, w }
    }
}

/// Raw edges prior to CSR construction.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<Edge>) -> Self {
        Self { n, edges }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        for e in &self.edges {
            if e.u >= self.n || e.v >= self.n {
                return Err(GraphError::NodeOutOfRange { u: e.u, v: e.v, n: self.n });
            }
            if !e.w.is_finite() {
                return Err(GraphError::InvalidWeight { u: e.u, v: e.v, w: e.w });
            }
        }
        Ok(())
    }
}

/// Compressed sparse row adjacency with `f64` weights.
///
/// Rows are sorted by destination; entries with equal destination keep
/// their input order.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrGraph {
    n: usize,
    row_ptr: Vec<usize>,
    col: Vec<usize>,
    val: Vec<f64>,
}

impl CsrGraph {
    /// Wraps prebuilt arrays after checking every CSR invariant.
    pub fn from_parts(
        n: usize,
        row_ptr: Vec<usize>,
        col: Vec<usize>,
        val: Vec<f64>,
    ) -> Result<Self, GraphError> {
        let bad = |msg: &str| Err(GraphError::MalformedCsr(msg.to_string()));
        if row_ptr.len() != n + 1 {
            return bad("row_ptr must have n + 1 entries");
        }
        if row_ptr[0] != 0 || row_ptr[n] != col.len() {
            return bad("row_ptr must start at 0 and end at m");
        }
        if col.len() != val.len() {
            return bad("col and val lengths differ");
        }
        if row_ptr.windows(2).any(|w| w[0] > w[1]) {
            return bad("row_ptr is not monotone");
        }
        if col.iter().any(|&c| c >= n) {
            return bad("column index out of range");
        }
        if val.iter().any(|w| !w.is_finite()) {
            return bad("non-finite weight");
        }
        for r in 0..n {
            if col[row_ptr[r]..row_ptr[r + 1]].windows(2).any(|w| w[0] > w[1]) {
                return bad("row is not sorted by column");
            }
        }
        Ok(Self { n, row_ptr, col, val })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, row_ptr: vec![0; n + 1], col: Vec::new(), val: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.col.len()
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn col(&self) -> &[usize] {
        &self.col
    }

    pub fn val(&self) -> &[f64] {
        &self.val
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.row_ptr[u + 1] - self.row_ptr[u]
    }

    /// Destinations and weights of `u`'s out-edges.
    #[inline]
    pub fn row(&self, u: usize) -> (&[usize], &[f64]) {
        let (start, end) = (self.row_ptr[u], self.row_ptr[u + 1]);
        (&self.col[start..end], &self.val[start..end])
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let (cols, vals) = self.row(u);
        cols.iter().copied().zip(vals.iter().copied())
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).map(move |(v, w)| Edge::new(u, v, w)))
    }

    /// First edge with a negative weight, in CSR order.
    pub fn first_negative_edge(&self) -> Option<Edge> {
        self.edges().find(|e| e.w < 0.0)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList::new(self.n, self.edges().collect())
    }
}

pub fn build_csr(el: &EdgeList) -> Result<CsrGraph, GraphError> {
    el.validate()?;
    let n = el.n;
    let mut row_ptr = vec![0usize; n + 1];
    for e in &el.edges {
        row_ptr[e.u + 1] += 1;
    }
    for i in 0..n {
        row_ptr[i + 1] += row_ptr[i];
    }
    let m = el.edges.len();
    let mut entries = vec![(0usize, 0.0f64); m];
    let mut cursor = row_ptr[..n].to_vec();
    for e in &el.edges {
        entries[cursor[e.u]] = (e.v, e.w);
        cursor[e.u] += 1;
    }
    for r in 0..n {
        // stable: parallel edges keep input order
        entries[row_ptr[r]..row_ptr[r + 1]].sort_by_key(|&(c, _)| c);
    }
    let (col, val) = entries.into_iter().unzip();
    Ok(CsrGraph { n, row_ptr, col, val })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightMode {
    Keep,
    Unit,
    /// I.i.d. draws from `[lo, hi)`.
    RandomUniform { lo: f64, hi: f64, seed: u64 },
}

/// Returns a copy of `g` with the same structure and weights rewritten per `mode`.
pub fn apply_weight_mode(g: &CsrGraph, mode: WeightMode) -> Result<CsrGraph, GraphError> {
    let val = match mode {
        WeightMode::Keep => g.val.clone(),
        WeightMode::Unit => vec![1.0; g.m()],
        WeightMode::RandomUniform { lo, hi, seed } => {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(GraphError::InvalidRange { lo, hi });
            }
            let dist = Uniform::new(lo, hi);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..g.m()).map(|_| dist.sample(&mut rng)).collect()
        }
    };
    Ok(CsrGraph { n: g.n, row_ptr: g.row_ptr.clone(), col: g.col.clone(), val })
}
