use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_weight_mode, CsrGraph, GraphError, WeightMode};

/// Output of [`generate_random_graph`].
#[derive(Debug, Clone)]
pub struct RandomGraph {
    pub graph: CsrGraph,
    /// Edge probability actually used.
    pub p: f64,
    /// Set when the requested degree exceeded `n - 1` and was clamped.
    pub warning: Option<String>,
}

/// Directed Erdős–Rényi graph without self-loops: every ordered pair `u != v`
/// is an edge with probability `avg_degree / max(n - 1, 1)`.
///
/// Structure depends only on `seed`; weights are 1.0 and then rewritten by
/// `mode`, which carries its own seed.
pub fn generate_random_graph(
    n: usize,
    avg_degree: f64,
    mode: WeightMode,
    seed: u64,
) -> Result<RandomGraph, GraphError> {
    let slots_per_row = n.saturating_sub(1) as u64;
    let mut p = if avg_degree.is_nan() || avg_degree <= 0.0 {
        0.0
    } else {
        avg_degree / slots_per_row.max(1) as f64
    };
    let mut warning = None;
    if p > 1.0 {
        warning = Some(format!(
            "avg_degree {avg_degree} exceeds n - 1 = {slots_per_row}; clamped to a complete graph"
        ));
        p = 1.0;
    }

    let mut row_ptr = vec![0usize; n + 1];
    let mut col = Vec::new();
    let total = n as u64 * slots_per_row;
    if p > 0.0 && total > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_q = (1.0 - p).ln();
        let mut slot: u64 = 0;
        loop {
            if p < 1.0 {
                // geometric gap to the next present slot
                let r: f64 = 1.0 - rng.gen::<f64>();
                let gap = (r.ln() / log_q).floor();
                if gap >= (total - slot) as f64 {
                    break;
                }
                slot += gap as u64;
            }
            if slot >= total {
                break;
            }
            let u = (slot / slots_per_row) as usize;
            let r = (slot % slots_per_row) as usize;
            let v = if r < u { r } else { r + 1 };
            row_ptr[u + 1] += 1;
            col.push(v);
            slot += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
    }
    let val = vec![1.0; col.len()];
    let structure = CsrGraph::from_parts(n, row_ptr, col, val)?;
    let graph = apply_weight_mode(&structure, mode)?;
    Ok(RandomGraph { graph, p, warning })
}
