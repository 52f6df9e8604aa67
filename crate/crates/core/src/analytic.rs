//! Closed-form code parameters and bounds for {r,s} surface codes.

use num_rational::Rational64;

use crate::{Error, Result};

/// Schläfli symbol, edge count and the distance-scaling constant c.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TessellationParams {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub c: f64,
}

impl TessellationParams {
    pub fn new(r: usize, s: usize, n: usize) -> Self {
        Self { r, s, n, c: f64::NAN }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn is_hyperbolic(&self) -> bool {
        // 1/r + 1/s < 1/2
        2 * (self.r + self.s) < self.r * self.s
    }
}

/// k/n = 1 − 2/r − 2/s + 2/n.
pub fn encoding_rate(p: &TessellationParams) -> Rational64 {
    let one = Rational64::from_integer(1);
    let two = Rational64::from_integer(2);
    one - two / p.r as i64 - two / p.s as i64 + two / p.n as i64
}

/// Encoded qubits k = n·rate for an orientable closed {r,s} surface.
pub fn encoded_qubits(p: &TessellationParams) -> i64 {
    let k = encoding_rate(p) * p.n as i64;
    debug_assert!(k.is_integer());
    k.to_integer()
}

/// d ≤ (r/2)·log_{√(rs)}(2n).
pub fn distance_upper_bound(p: &TessellationParams) -> Result<f64> {
    if !p.is_hyperbolic() {
        return Err(Error::InvalidInput(format!("{{{},{}}} is not hyperbolic", p.r, p.s)));
    }
    let (r, s, n) = (p.r as f64, p.s as f64, p.n as f64);
    Ok(r / 2.0 * (2.0 * n).ln() / (r * s).sqrt().ln())
}

/// Lower bound on the matching threshold: exp(−2/c)/(4(m−1)²) with perfect
/// measurements, exp(−4/c)/(4(m+1)²) with noisy ones, m = max(r, s).
pub fn threshold_lower_bound(p: &TessellationParams, noisy: bool) -> Result<f64> {
    if !(p.c > 0.0) {
        return Err(Error::InvalidInput(format!("c must be positive, got {}", p.c)));
    }
    let m = p.r.max(p.s) as f64;
    Ok(if noisy { (-4.0 / p.c).exp() / (4.0 * (m + 1.0).powi(2)) } else { (-2.0 / p.c).exp() / (4.0 * (m - 1.0).powi(2)) })
}

/// Per-round failure rate from the failure rate over T rounds.
pub fn p_round(p_bar: f64, rounds: u32) -> Result<f64> {
    if !(0.0..1.0).contains(&p_bar) || rounds == 0 {
        return Err(Error::InvalidInput(format!("need 0 <= P < 1 and T >= 1, got P={p_bar}, T={rounds}")));
    }
    Ok(1.0 - (1.0 - p_bar).powf(1.0 / rounds as f64))
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// T · N_d · (3/4 − (−1)^d/4) · C(d, ⌈d/2⌉) · p^⌈d/2⌉.
pub fn low_p_failure_approx(n_d: f64, d: u32, p: f64, rounds: u32) -> f64 {
    let half = d.div_ceil(2);
    let parity = if d.is_multiple_of(2) { 0.5 } else { 1.0 };
    rounds as f64 * n_d * parity * binomial(d as u64, half as u64) * p.powi(half as i32)
}

/// Largest p whose approximate failure rate stays at `target`, by bisection.
pub fn p_max(n_d: f64, d: u32, rounds: u32, target: f64) -> Result<f64> {
    if !(target > 0.0 && target < 1.0) {
        return Err(Error::InvalidInput(format!("target must lie in (0,1), got {target}")));
    }
    let f = |p: f64| low_p_failure_approx(n_d, d, p, rounds) - target;
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    if f(hi) < 0.0 {
        return Ok(hi);
    }
    while hi - lo > 1e-9 * hi {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
