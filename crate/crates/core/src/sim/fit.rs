use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Quantity being fitted: mean memory time or logical failure rate. Both use
/// a quadratic in the scaling variable x = (p − p_c)·L^{1/ν}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FitModel {
    Memory,
    Logical,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitPoint {
    pub p: f64,
    pub l: f64,
    pub y: f64,
    /// Standard error of `y`; non-positive means unweighted.
    pub sigma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub model: FitModel,
    pub p_c: f64,
    pub nu: f64,
    /// Constant, linear and quadratic coefficients in x.
    pub coefficients: [f64; 3],
    /// Weighted sum of squared residuals.
    pub residual: f64,
    /// Covariance of (p_c, ν, c₀, c₁, c₂).
    pub covariance: Vec<Vec<f64>>,
}

impl FitResult {
    pub fn predict(&self, p: f64, l: f64) -> f64 {
        let x = (p - self.p_c) * l.powf(1.0 / self.nu);
        self.coefficients[0] + self.coefficients[1] * x + self.coefficients[2] * x * x
    }

    pub fn p_c_stderr(&self) -> f64 {
        self.covariance[0][0].sqrt()
    }
}

struct Problem<'a> {
    data: &'a [FitPoint],
    weights: Vec<f64>,
}

impl Problem<'_> {
    fn design(&self, p_c: f64, nu: f64) -> (DMatrix<f64>, DVector<f64>) {
        let m = self.data.len();
        let mut a = DMatrix::zeros(m, 3);
        let mut b = DVector::zeros(m);
        for (i, (d, w)) in self.data.iter().zip(&self.weights).enumerate() {
            let x = (d.p - p_c) * d.l.powf(1.0 / nu);
            let sw = w.sqrt();
            a[(i, 0)] = sw;
            a[(i, 1)] = sw * x;
            a[(i, 2)] = sw * x * x;
            b[i] = sw * d.y;
        }
        (a, b)
    }

    /// Best coefficients and weighted residual for fixed (p_c, ν).
    fn inner(&self, p_c: f64, nu: f64) -> ([f64; 3], f64) {
        let (a, b) = self.design(p_c, nu);
        let Ok(c) = a.clone().svd(true, true).solve(&b, 1e-14) else {
            return ([f64::NAN; 3], f64::INFINITY);
        };
        let r = &a * &c - &b;
        ([c[0], c[1], c[2]], r.norm_squared())
    }

    fn residuals(&self, theta: &[f64; 5]) -> DVector<f64> {
        let (a, b) = self.design(theta[0], theta[1]);
        &a * DVector::from_column_slice(&theta[2..]) - b
    }
}

/// Least-squares fit of the finite-size scaling ansatz.
pub fn fit_threshold(data: &[FitPoint], model: FitModel) -> Result<FitResult> {
    let mut ls: Vec<f64> = data.iter().map(|d| d.l).collect();
    let mut ps: Vec<f64> = data.iter().map(|d| d.p).collect();
    for v in [&mut ls, &mut ps] {
        v.sort_by(f64::total_cmp);
        v.dedup();
    }
    if ls.len() < 2 || ps.len() < 3 {
        return Err(Error::InvalidInput(format!("fit needs at least 2 sizes and 3 error rates, got {} and {}", ls.len(), ps.len())));
    }
    if data.iter().any(|d| !(d.p.is_finite() && d.y.is_finite() && d.l > 0.0)) {
        return Err(Error::InvalidInput("fit data must be finite with positive sizes".into()));
    }
    let weighted = data.iter().all(|d| d.sigma > 0.0);
    let weights = data.iter().map(|d| if weighted { 1.0 / (d.sigma * d.sigma) } else { 1.0 }).collect();
    let problem = Problem { data, weights };

    let (p_lo, p_hi) = (ps[0], ps[ps.len() - 1]);
    let (ln_lo, ln_hi) = (0.2f64.ln(), 5.0f64.ln());
    const GRID_P: usize = 80;
    const GRID_NU: usize = 60;
    let mut best = (f64::INFINITY, p_lo, 0.0);
    for i in 0..=GRID_P {
        let p_c = p_lo + (p_hi - p_lo) * i as f64 / GRID_P as f64;
        for j in 0..=GRID_NU {
            let ln_nu = ln_lo + (ln_hi - ln_lo) * j as f64 / GRID_NU as f64;
            let (_, ssr) = problem.inner(p_c, ln_nu.exp());
            if ssr < best.0 {
                best = (ssr, p_c, ln_nu);
            }
        }
    }

    // Compass search on (p_c, ln ν).
    let (mut ssr, mut p_c, mut ln_nu) = best;
    let mut step = [(p_hi - p_lo) / GRID_P as f64, (ln_hi - ln_lo) / GRID_NU as f64];
    let floor = [(p_hi - p_lo).max(f64::EPSILON) * 1e-13, 1e-13];
    let mut iterations = 0;
    while (step[0] > floor[0] || step[1] > floor[1]) && iterations < 200_000 {
        iterations += 1;
        let mut moved = false;
        for (dp, dn) in [(step[0], 0.0), (-step[0], 0.0), (0.0, step[1]), (0.0, -step[1])] {
            let (_, s) = problem.inner(p_c + dp, (ln_nu + dn).exp());
            if s < ssr {
                ssr = s;
                p_c += dp;
                ln_nu += dn;
                moved = true;
                break;
            }
        }
        if !moved {
            step[0] /= 2.0;
            step[1] /= 2.0;
        }
    }
    let nu = ln_nu.exp();
    let (coefficients, residual) = problem.inner(p_c, nu);

    let theta = [p_c, nu, coefficients[0], coefficients[1], coefficients[2]];
    let r0 = problem.residuals(&theta);
    let mut jac = DMatrix::zeros(data.len(), 5);
    for k in 0..5 {
        let h = 1e-6 * theta[k].abs().max(1e-6);
        let (mut up, mut down) = (theta, theta);
        up[k] += h;
        down[k] -= h;
        let col = (problem.residuals(&up) - problem.residuals(&down)) / (2.0 * h);
        jac.set_column(k, &col);
    }
    let dof = data.len().saturating_sub(5).max(1) as f64;
    let scale = if weighted { 1.0 } else { r0.norm_squared() / dof };
    let covariance = match (jac.transpose() * &jac).try_inverse() {
        Some(inv) => (0..5).map(|i| (0..5).map(|j| inv[(i, j)] * scale).collect()).collect(),
        None => vec![vec![f64::NAN; 5]; 5],
    };
    Ok(FitResult { model, p_c, nu, coefficients, residual, covariance })
}
