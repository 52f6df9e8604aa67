//! Seeded Monte Carlo: logical error rates of 2D codes under matching
//! decoders, memory times of 4D codes under cellular automata, confidence
//! intervals, crossing points and finite-size scaling fits.

mod campaign;
mod fit;
mod memory;
mod output;
mod rng;
mod stats;

use serde::{Deserialize, Serialize};

pub use campaign::{run_2d_noisy, run_2d_perfect, run_2d_perfect_until, Decoder2d, NoisyResult};
pub use fit::{fit_threshold, FitModel, FitPoint, FitResult};
pub use memory::{run_4d_memory, MemoryConfig, MemoryTimeResult};
pub use output::{format_float, memory_csv_header, memory_csv_row, sim_csv_header, sim_csv_row, CodeInfo};
pub use rng::{trial_rng, TrialRng};
pub use stats::{crossing, crossings, mean_and_stderr, wilson_interval};

/// Independent bit-flip (X) and phase-flip (Z) errors with probability `p`
/// per qubit and round; measured check bits flip with probability `q`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub p: f64,
    pub q: f64,
}

impl NoiseModel {
    pub fn perfect(p: f64) -> Self {
        Self { p, q: 0.0 }
    }

    pub fn symmetric(p: f64) -> Self {
        Self { p, q: p }
    }

    pub fn validate(&self) -> crate::Result<()> {
        for (name, v) in [("p", self.p), ("q", self.q)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(crate::Error::InvalidInput(format!("{name} = {v} is not a probability")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub trials: u64,
    pub failures_logical: u64,
    pub failures_stuck: u64,
    pub p_bar: f64,
    pub ci: (f64, f64),
    pub seed: u64,
    pub noise: NoiseModel,
    pub rounds: u32,
}

impl SimResult {
    pub(crate) fn new(trials: u64, failures_logical: u64, failures_stuck: u64, seed: u64, noise: NoiseModel, rounds: u32) -> Self {
        let failures = failures_logical + failures_stuck;
        let p_bar = if trials == 0 { 0.0 } else { failures as f64 / trials as f64 };
        let ci = wilson_interval(failures, trials.max(1), 0.95);
        Self { trials, failures_logical, failures_stuck, p_bar, ci, seed, noise, rounds }
    }

    pub fn failures(&self) -> u64 {
        self.failures_logical + self.failures_stuck
    }
}
