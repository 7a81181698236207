//! Random-error decoding trials with per-trial reproducible streams.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::decoder::{DecodingContext, Verdict};
use super::syndrome::{ErrorChain, Pauli};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseModel {
    /// Exactly `w` distinct qubits, uniformly.
    FixedWeight(usize),
    /// Each qubit independently with probability `p`.
    Iid(f64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub weight: usize,
    pub syndrome_weight: usize,
    pub iterations: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloSummary {
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// Largest syndrome weight seen per unit of error weight.
    pub max_syndrome_ratio: f64,
}

/// The stream for `trial`: the master seed picks the key, the trial
/// number the stream, so trials are independent of scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn sample_error(ctx: &DecodingContext, pauli: Pauli, model: NoiseModel, rng: &mut ChaCha8Rng) -> ErrorChain {
    let n = ctx.qubit_count();
    let qubits: Vec<u32> = match model {
        NoiseModel::FixedWeight(w) => sample(rng, n, w.min(n)).into_iter().map(|q| q as u32).collect(),
        NoiseModel::Iid(p) => (0..n as u32).filter(|_| rng.gen_bool(p)).collect(),
    };
    ErrorChain::new(pauli, qubits, n).expect("sampled qubits are in range")
}

pub fn run_trial(ctx: &DecodingContext, pauli: Pauli, model: NoiseModel, seed: u64, trial: u64) -> TrialRecord {
    let mut rng = trial_rng(seed, trial);
    let error = sample_error(ctx, pauli, model, &mut rng);
    let (s, report) = ctx.decode_error(&error);
    let per_qubit = ctx.max_checks_per_qubit(pauli);
    assert!(
        s.weight() <= per_qubit * error.weight(),
        "syndrome weight {} exceeds {} × {}",
        s.weight(),
        per_qubit,
        error.weight()
    );
    TrialRecord {
        trial,
        weight: error.weight(),
        syndrome_weight: s.weight(),
        iterations: report.iterations,
        verdict: report.verdict,
    }
}

/// Runs `trials` trials in parallel; records come back in trial order.
pub fn monte_carlo(ctx: &DecodingContext, pauli: Pauli, model: NoiseModel, trials: u64, seed: u64) -> Vec<TrialRecord> {
    (0..trials).into_par_iter().map(|t| run_trial(ctx, pauli, model, seed, t)).collect()
}

pub fn summarize(records: &[TrialRecord]) -> MonteCarloSummary {
    let successes = records.iter().filter(|r| r.verdict == Verdict::Success).count();
    let max_syndrome_ratio = records
        .iter()
        .filter(|r| r.weight > 0)
        .map(|r| r.syndrome_weight as f64 / r.weight as f64)
        .fold(0.0, f64::max);
    MonteCarloSummary {
        trials: records.len(),
        successes,
        success_rate: if records.is_empty() { 1.0 } else { successes as f64 / records.len() as f64 },
        max_syndrome_ratio,
    }
}

pub const CSV_HEADER: &str = "trial,weight,syndrome_weight,iterations,verdict";

pub fn to_csv(records: &[TrialRecord]) -> String {
    let mut s = String::with_capacity(32 * records.len() + 64);
    let _ = writeln!(s, "{CSV_HEADER}");
    for r in records {
        let _ = writeln!(s, "{},{},{},{},{}", r.trial, r.weight, r.syndrome_weight, r.iterations, r.verdict);
    }
    s
}
