//! Declarative batches of sampler runs with reproducible CSV output.
//!
//! ```toml
//! master_seed = 7
//! mode = "rainbow"
//! graph = "cycle"
//! colouring = "global"
//! n = [100, 200]
//! k = [2, 3]
//! trials = 5
//! ```

use std::fmt::Write as _;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colouring::{gen_k_bounded, gen_locally_k_bounded};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sampler::{find_copy, FindConfig, FindOutcome};
use crate::Mode;

pub const CSV_HEADER: &str = "trial_id,n,delta,k,mode,seed,outcome,resamples,ms";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFamily {
    /// Hamilton cycle on all `n` vertices.
    Cycle,
    /// Hamilton path.
    Path,
    /// Spanning circulant graph of maximum degree `delta`.
    Circulant,
    /// Random spanning graph of maximum degree `delta`.
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColouringKind {
    /// `k`-bounded.
    Global,
    /// Locally `k`-bounded.
    Local,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub master_seed: u64,
    pub mode: Mode,
    pub graph: GraphFamily,
    pub colouring: ColouringKind,
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    /// Only used by the `circulant` and `random` families.
    #[serde(default = "default_delta")]
    pub delta: Vec<usize>,
    /// Repetitions per `(n, k, delta)` combination.
    #[serde(default = "default_trials")]
    pub trials: usize,
    pub max_resamples: Option<u64>,
    /// Record wall time in the `ms` column; off by default so that output
    /// is byte-identical across runs.
    #[serde(default)]
    pub timing: bool,
}

fn default_delta() -> Vec<usize> {
    vec![2]
}

fn default_trials() -> usize {
    1
}

impl ExperimentSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: ExperimentSpec = toml::from_str(text).map_err(|e| {
            let line = e
                .span()
                .map(|s| text[..s.start].matches('\n').count() + 1)
                .unwrap_or(0);
            Error::format(line, e.message().to_owned())
        })?;
        if spec.n.is_empty() || spec.k.is_empty() || spec.delta.is_empty() {
            return Err(Error::domain("n, k and delta need at least one value"));
        }
        Ok(spec)
    }

    fn uses_delta(&self) -> bool {
        matches!(self.graph, GraphFamily::Circulant | GraphFamily::Random)
    }

    /// `(n, k, delta)` per trial, in trial order.
    pub fn trials(&self) -> Vec<(usize, usize, usize)> {
        let deltas: &[usize] = if self.uses_delta() { &self.delta } else { &[0] };
        let mut out = Vec::new();
        for &n in &self.n {
            for &k in &self.k {
                for &d in deltas {
                    out.extend(std::iter::repeat_n((n, k, d), self.trials));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub trial_id: usize,
    pub n: usize,
    /// Maximum degree of the generated graph.
    pub delta: usize,
    pub k: usize,
    pub mode: Mode,
    pub seed: u64,
    pub outcome: &'static str,
    pub resamples: u64,
    pub ms: u64,
}

/// Seed of trial `trial_id`: the first output of ChaCha8 keyed by the
/// master seed on stream `trial_id`.
pub fn trial_seed(master_seed: u64, trial_id: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial_id as u64);
    rng.next_u64()
}

fn run_trial(
    spec: &ExperimentSpec,
    trial_id: usize,
    (n, k, delta): (usize, usize, usize),
) -> Result<TrialRow> {
    let seed = trial_seed(spec.master_seed, trial_id);
    let start = Instant::now();
    let g = match spec.graph {
        GraphFamily::Cycle => Graph::cycle(n),
        GraphFamily::Path => Graph::path(n),
        GraphFamily::Circulant => Graph::circulant(n, delta),
        GraphFamily::Random => {
            Graph::random_bounded_degree(n, delta, 1.0, &mut ChaCha8Rng::seed_from_u64(seed))
        }
    };
    let colouring = match spec.colouring {
        ColouringKind::Global => gen_k_bounded(n, k, seed)?,
        ColouringKind::Local => gen_locally_k_bounded(n, k, seed)?,
    };
    let config = FindConfig {
        max_resamples: spec.max_resamples,
        ..FindConfig::new(seed)
    };
    let outcome = find_copy(&g, &colouring, spec.mode, &config)?;
    let ms = if spec.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(TrialRow {
        trial_id,
        n,
        delta: g.max_degree(),
        k,
        mode: spec.mode,
        seed,
        outcome: match outcome {
            FindOutcome::Found { .. } => "found",
            FindOutcome::BudgetExhausted { .. } => "exhausted",
        },
        resamples: outcome.resamples(),
        ms,
    })
}

/// Runs every trial, concurrently, and returns the rows by trial id.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<TrialRow>> {
    let trials = spec.trials();
    trials
        .into_par_iter()
        .enumerate()
        .map(|(id, params)| run_trial(spec, id, params))
        .collect()
}

pub fn to_csv(rows: &[TrialRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.trial_id, r.n, r.delta, r.k, r.mode, r.seed, r.outcome, r.resamples, r.ms
        );
    }
    out
}
