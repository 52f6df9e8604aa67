use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{trial_rng, NoiseModel, SimResult, TrialRng};
use crate::analytic::p_round;
use crate::code::{CssCode, LogicalBasis, Pauli};
use crate::decode::{mwpm_decode_noisy_2d, MwpmDecoder, SpacetimeSyndrome};
use crate::gf2::BitVector;
use crate::{Error, Result};

/// Matching decoders for both error types of a 2D code.
pub struct Decoder2d<'a> {
    code: &'a CssCode,
    logicals: &'a LogicalBasis,
    z: MwpmDecoder,
    x: MwpmDecoder,
}

/// Draws one uniform per element so that runs at different p share randomness.
fn sample(rng: &mut TrialRng, len: usize, p: f64, out: &mut BitVector) {
    for i in 0..len {
        if rng.gen::<f64>() < p {
            out.flip(i);
        }
    }
}

impl<'a> Decoder2d<'a> {
    pub fn new(code: &'a CssCode, logicals: &'a LogicalBasis) -> Result<Self> {
        if code.complex().dimension() != 2 || code.qubit_level() != 1 {
            return Err(Error::InvalidInput("matching simulation needs a 2D code with qubits on edges".into()));
        }
        Ok(Self { code, logicals, z: MwpmDecoder::new(code, Pauli::Z)?, x: MwpmDecoder::new(code, Pauli::X)? })
    }

    pub fn decoder(&self, error_type: Pauli) -> &MwpmDecoder {
        match error_type {
            Pauli::Z => &self.z,
            Pauli::X => &self.x,
        }
    }

    /// One perfect-measurement trial; true on failure of either error type.
    pub fn perfect_trial(&self, p: f64, rng: &mut TrialRng) -> Result<bool> {
        let z = self.side_trial(p, Pauli::Z, rng)?;
        let x = self.side_trial(p, Pauli::X, rng)?;
        Ok(z || x)
    }

    /// Errors of type `t` only; true on a logical failure.
    pub fn side_trial(&self, p: f64, t: Pauli, rng: &mut TrialRng) -> Result<bool> {
        let n = self.code.n();
        let mut error = BitVector::zeros(n);
        sample(rng, n, p, &mut error);
        let syndrome = self.code.syndrome(&error, t)?;
        let residual = error.xor(&self.decoder(t).decode(&syndrome)?);
        Ok(self.logicals.anticommutes(&residual, t))
    }

    /// One trial of `rounds` noisy syndrome rounds followed by a perfect one.
    pub fn noisy_trial(&self, noise: NoiseModel, rounds: u32, rng: &mut TrialRng) -> Result<bool> {
        let n = self.code.n();
        let mut failed = false;
        for t in [Pauli::Z, Pauli::X] {
            let checks = self.code.checks_for(t);
            let mut error = BitVector::zeros(n);
            let mut measured = Vec::with_capacity(rounds as usize);
            for _ in 0..rounds {
                sample(rng, n, noise.p, &mut error);
                let mut s = checks.mul_vec(&error);
                sample(rng, checks.rows(), noise.q, &mut s);
                measured.push(s);
            }
            let st = SpacetimeSyndrome::new(measured, checks.mul_vec(&error))?;
            let (_, outcome) = mwpm_decode_noisy_2d(self.code, self.decoder(t), &st, &error, t)?;
            failed |= !outcome.is_success();
        }
        Ok(failed)
    }

    fn count(&self, range: std::ops::Range<u64>, seed: u64, trial: impl Fn(&mut TrialRng) -> Result<bool> + Sync) -> Result<u64> {
        range.into_par_iter().map(|i| trial(&mut trial_rng(seed, i)).map(u64::from)).try_reduce(|| 0, |a, b| Ok(a + b))
    }

    pub fn run_perfect(&self, p: f64, trials: u64, seed: u64) -> Result<SimResult> {
        let noise = NoiseModel::perfect(p);
        noise.validate()?;
        let failures = self.count(0..trials, seed, |rng| self.perfect_trial(p, rng))?;
        Ok(SimResult::new(trials, failures, 0, seed, noise, 1))
    }

    /// Runs batches until `min_failures` failures or `max_trials` trials.
    pub fn run_perfect_until(&self, p: f64, min_failures: u64, max_trials: u64, batch: u64, seed: u64) -> Result<SimResult> {
        self.until(p, min_failures, max_trials, batch, seed, |rng| self.perfect_trial(p, rng))
    }

    /// As [`Self::run_perfect_until`], counting only failures caused by errors of type `t`.
    pub fn run_side_until(&self, p: f64, t: Pauli, min_failures: u64, max_trials: u64, batch: u64, seed: u64) -> Result<SimResult> {
        self.until(p, min_failures, max_trials, batch, seed, |rng| self.side_trial(p, t, rng))
    }

    fn until(
        &self,
        p: f64,
        min_failures: u64,
        max_trials: u64,
        batch: u64,
        seed: u64,
        trial: impl Fn(&mut TrialRng) -> Result<bool> + Sync,
    ) -> Result<SimResult> {
        let noise = NoiseModel::perfect(p);
        noise.validate()?;
        let (mut trials, mut failures) = (0, 0);
        while trials < max_trials && failures < min_failures {
            let end = (trials + batch.max(1)).min(max_trials);
            failures += self.count(trials..end, seed, &trial)?;
            trials = end;
        }
        Ok(SimResult::new(trials, failures, 0, seed, noise, 1))
    }

    pub fn run_noisy(&self, noise: NoiseModel, rounds: u32, trials: u64, seed: u64) -> Result<NoisyResult> {
        noise.validate()?;
        if rounds == 0 {
            return Err(Error::InvalidInput("at least one noisy round is required".into()));
        }
        let failures = self.count(0..trials, seed, |rng| self.noisy_trial(noise, rounds, rng))?;
        let result = SimResult::new(trials, failures, 0, seed, noise, rounds);
        let p_round = p_round(result.p_bar, rounds)?;
        Ok(NoisyResult { result, p_round })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoisyResult {
    pub result: SimResult,
    /// Per-round logical failure rate implied by `result.p_bar`.
    pub p_round: f64,
}

/// Logical failure rate with perfect syndromes and matching on both error types.
pub fn run_2d_perfect(code: &CssCode, logicals: &LogicalBasis, p: f64, trials: u64, seed: u64) -> Result<SimResult> {
    Decoder2d::new(code, logicals)?.run_perfect(p, trials, seed)
}

pub fn run_2d_perfect_until(code: &CssCode, logicals: &LogicalBasis, p: f64, min_failures: u64, max_trials: u64, seed: u64) -> Result<SimResult> {
    Decoder2d::new(code, logicals)?.run_perfect_until(p, min_failures, max_trials, 100_000, seed)
}

/// Logical failure rate after `rounds` noisy rounds and one perfect round.
pub fn run_2d_noisy(code: &CssCode, logicals: &LogicalBasis, noise: NoiseModel, rounds: u32, trials: u64, seed: u64) -> Result<NoisyResult> {
    Decoder2d::new(code, logicals)?.run_noisy(noise, rounds, trials, seed)
}
