//! Path-update (μ) experiment: the same structure is solved once with unit
//! weights and once with weights drawn from `[0, 2)`, and the per-source
//! write statistics of the two arms are compared.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::Tabular;
use super::ExperimentError;
use crate::graph::{apply_weight_mode, CsrGraph, WeightMode};
use crate::solver::{mssp, AggregateStats, Algorithm, SolveStats};

pub const DEFAULT_MU_SOURCES: usize = 64;
pub const RANDOM_WEIGHT_LO: f64 = 0.0;
pub const RANDOM_WEIGHT_HI: f64 = 2.0;

#[derive(Debug, Clone)]
pub struct MuExperiment {
    pub graph_id: String,
    pub num_sources: usize,
    pub seed: u64,
    pub workers: usize,
    pub directed: Option<bool>,
}

impl MuExperiment {
    pub fn new(graph_id: impl Into<String>, num_sources: usize, seed: u64) -> Self {
        Self { graph_id: graph_id.into(), num_sources, seed, workers: 1, directed: None }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn run(&self, g: &CsrGraph) -> Result<MuReport, ExperimentError> {
        run_mu_experiment(g, self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuSample {
    pub source: usize,
    pub baseline: SolveStats,
    pub randomized: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub graph_id: String,
    pub directed: Option<bool>,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub sources_requested: usize,
    pub sources_sampled: usize,
    pub weight_lo: f64,
    pub weight_hi: f64,
    /// Unit-weight arm.
    pub baseline: AggregateStats,
    /// Random-weight arm.
    pub randomized: AggregateStats,
    /// Randomized arm, averaged over sources that reach another node.
    pub mean_updated_ratio: f64,
    pub mean_mu: f64,
    pub note: Option<String>,
    pub samples: Vec<MuSample>,
}

pub fn run_mu_experiment(g: &CsrGraph, cfg: &MuExperiment) -> Result<MuReport, ExperimentError> {
    if cfg.num_sources == 0 {
        return Err(ExperimentError::Invalid("num_sources must be at least 1".into()));
    }
    let n = g.n();
    let mut note = None;
    let k = if cfg.num_sources > n {
        note = Some(format!("requested {} sources, clamped to n = {n}", cfg.num_sources));
        n
    } else {
        cfg.num_sources
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sources = sample(&mut rng, n, k).into_vec();
    sources.sort_unstable();

    let unit = apply_weight_mode(g, WeightMode::Unit)?;
    let random = apply_weight_mode(
        g,
        WeightMode::RandomUniform { lo: RANDOM_WEIGHT_LO, hi: RANDOM_WEIGHT_HI, seed: cfg.seed },
    )?;
    let base_rows = mssp(&unit, &sources, Algorithm::Govm, cfg.workers)?;
    let rand_rows = mssp(&random, &sources, Algorithm::Govm, cfg.workers)?;

    let samples: Vec<MuSample> = sources
        .iter()
        .zip(base_rows.iter().zip(&rand_rows))
        .map(|(&source, (b, r))| MuSample { source, baseline: b.stats, randomized: r.stats })
        .collect();
    let baseline = AggregateStats::from_stats(samples.iter().map(|s| &s.baseline));
    let randomized = AggregateStats::from_stats(samples.iter().map(|s| &s.randomized));
    if baseline.re_updates != 0 {
        return Err(ExperimentError::Invariant(format!(
            "unit-weight arm reported {} re-updates",
            baseline.re_updates
        )));
    }

    Ok(MuReport {
        graph_id: cfg.graph_id.clone(),
        directed: cfg.directed,
        n,
        m: g.m(),
        seed: cfg.seed,
        sources_requested: cfg.num_sources,
        sources_sampled: k,
        weight_lo: RANDOM_WEIGHT_LO,
        weight_hi: RANDOM_WEIGHT_HI,
        baseline,
        randomized,
        mean_updated_ratio: randomized.mean_updated_ratio,
        mean_mu: randomized.mean_mu,
        note,
        samples,
    })
}

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

const AGG_KEYS: [&str; 11] = [
    "sources",
    "reachable_sources",
    "outer_steps",
    "max_outer_steps",
    "relaxations",
    "writes",
    "first_discoveries",
    "re_updates",
    "mean_mu",
    "mean_updated_ratio",
    "negative_cycles",
];

fn agg_values(a: &AggregateStats) -> [String; 11] {
    [
        a.sources.to_string(),
        a.reachable_sources.to_string(),
        a.outer_steps.to_string(),
        a.max_outer_steps.to_string(),
        a.relaxations.to_string(),
        a.writes.to_string(),
        a.first_discoveries.to_string(),
        a.re_updates.to_string(),
        a.mean_mu.to_string(),
        a.mean_updated_ratio.to_string(),
        a.negative_cycles.to_string(),
    ]
}

impl Tabular for MuReport {
    fn header() -> Vec<&'static str> {
        const BASE: [&str; 11] = [
            "baseline_sources",
            "baseline_reachable_sources",
            "baseline_outer_steps",
            "baseline_max_outer_steps",
            "baseline_relaxations",
            "baseline_writes",
            "baseline_first_discoveries",
            "baseline_re_updates",
            "baseline_mean_mu",
            "baseline_mean_updated_ratio",
            "baseline_negative_cycles",
        ];
        const RAND: [&str; 11] = [
            "randomized_sources",
            "randomized_reachable_sources",
            "randomized_outer_steps",
            "randomized_max_outer_steps",
            "randomized_relaxations",
            "randomized_writes",
            "randomized_first_discoveries",
            "randomized_re_updates",
            "randomized_mean_mu",
            "randomized_mean_updated_ratio",
            "randomized_negative_cycles",
        ];
        debug_assert!(BASE.iter().zip(AGG_KEYS).all(|(b, k)| b.ends_with(k)));
        let mut h = vec![
            "graph_id",
            "directed",
            "n",
            "m",
            "seed",
            "sources_requested",
            "sources_sampled",
            "weight_lo",
            "weight_hi",
            "mean_mu",
            "mean_updated_ratio",
        ];
        h.extend(BASE);
        h.extend(RAND);
        h.push("note");
        h
    }

    fn row(&self) -> Vec<String> {
        let mut r = vec![
            self.graph_id.clone(),
            opt_bool(self.directed),
            self.n.to_string(),
            self.m.to_string(),
            self.seed.to_string(),
            self.sources_requested.to_string(),
            self.sources_sampled.to_string(),
            self.weight_lo.to_string(),
            self.weight_hi.to_string(),
            self.mean_mu.to_string(),
            self.mean_updated_ratio.to_string(),
        ];
        r.extend(agg_values(&self.baseline));
        r.extend(agg_values(&self.randomized));
        r.push(self.note.clone().unwrap_or_default());
        r
    }
}
