use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{mean_and_stderr, trial_rng, NoiseModel, TrialRng};
use crate::code::CssCode;
use crate::decode::{sweep, verify_correctable, Ca4Lattice, CaGrid4D, CaRule, Classification};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemoryConfig {
    pub rule: CaRule,
    pub noise: NoiseModel,
    /// Sweeps per QEC cycle.
    pub sweeps: usize,
    pub max_cycles: u64,
    /// Stuck threshold for the correctability check; 10·L when `None`.
    pub v_max: Option<usize>,
}

impl MemoryConfig {
    pub fn new(rule: CaRule, noise: NoiseModel) -> Self {
        Self { rule, noise, sweeps: 1, max_cycles: 100_000, v_max: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemoryTimeResult {
    /// Survival time per trial: cycles completed before the first failure.
    pub times: Vec<u64>,
    pub mean: f64,
    pub stderr: f64,
    pub failures_logical: u64,
    pub failures_stuck: u64,
    /// Trials that reached `max_cycles` without failing.
    pub censored: u64,
    pub seed: u64,
    pub config: MemoryConfig,
}

/// Indices of an iid Bernoulli(p) subset of `0..len`, drawn by geometric gaps.
fn sparse_sample(rng: &mut TrialRng, len: usize, p: f64) -> Vec<usize> {
    if p <= 0.0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..len).collect();
    }
    let log_q = (-p).ln_1p();
    let mut out = Vec::new();
    let mut pos = 0.0f64;
    loop {
        let u = 1.0 - rng.gen::<f64>();
        pos += (u.ln() / log_q).floor();
        if pos >= len as f64 {
            return out;
        }
        out.push(pos as usize);
        pos += 1.0;
    }
}

fn side_of(code: &CssCode) -> Result<usize> {
    let n = code.n();
    let l = ((n / 6) as f64).powf(0.25).round() as usize;
    if code.complex().dimension() != 4 || code.qubit_level() != 2 || 6 * l.pow(4) != n {
        return Err(Error::InvalidInput("memory simulation needs a periodic 4D code with qubits on faces".into()));
    }
    Ok(l)
}

/// Memory time of the 4D toric code under a cellular-automaton decoder.
pub fn run_4d_memory(code: &CssCode, config: MemoryConfig, trials: u64, seed: u64) -> Result<MemoryTimeResult> {
    config.noise.validate()?;
    let l = side_of(code)?;
    let lattice = Ca4Lattice::new(l)?;
    let v_max = config.v_max.unwrap_or(10 * l);
    let outcomes: Vec<(u64, Option<Classification>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let mut grid = CaGrid4D::new(&lattice);
            for cycle in 0..config.max_cycles {
                for f in sparse_sample(&mut rng, lattice.faces(), config.noise.p) {
                    grid.flip(f);
                }
                if config.noise.q > 0.0 {
                    let mut mask = vec![false; lattice.edges()];
                    for e in sparse_sample(&mut rng, lattice.edges(), config.noise.q) {
                        mask[e] = true;
                    }
                    grid.set_mask(Some(mask))?;
                }
                for _ in 0..config.sweeps {
                    sweep(&mut grid, config.rule, &mut rng);
                }
                grid.set_mask(None)?;
                let outcome = verify_correctable(code, &grid, config.rule, v_max, &mut rng)?;
                if !outcome.is_success() {
                    return Ok((cycle, Some(outcome.class)));
                }
            }
            Ok((config.max_cycles, None))
        })
        .collect::<Result<_>>()?;
    let times: Vec<u64> = outcomes.iter().map(|o| o.0).collect();
    let tally = |c: Classification| outcomes.iter().filter(|o| o.1 == Some(c)).count() as u64;
    let values: Vec<f64> = times.iter().map(|&t| t as f64).collect();
    let (mean, stderr) = mean_and_stderr(&values);
    Ok(MemoryTimeResult {
        failures_logical: tally(Classification::LogicalFailure),
        failures_stuck: tally(Classification::StuckFailure),
        censored: outcomes.iter().filter(|o| o.1.is_none()).count() as u64,
        times,
        mean,
        stderr,
        seed,
        config,
    })
}
