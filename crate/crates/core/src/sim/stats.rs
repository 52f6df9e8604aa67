use statrs::distribution::{ContinuousCDF, Normal};

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(failures: u64, trials: u64, confidence: f64) -> (f64, f64) {
    assert!(trials >= 1 && failures <= trials, "need 0 <= failures <= trials and trials >= 1");
    let z = Normal::new(0.0, 1.0).expect("unit normal").inverse_cdf(0.5 + confidence / 2.0);
    let n = trials as f64;
    let phat = failures as f64 / n;
    let z2 = z * z;
    let centre = (phat + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z / (1.0 + z2 / n) * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Sample mean and its standard error.
pub fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, f64::NAN);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// First crossing of two curves sampled at the same abscissae, by linear
/// interpolation of their difference.
pub fn crossing(xs: &[f64], a: &[f64], b: &[f64]) -> Option<f64> {
    let diff: Vec<f64> = a.iter().zip(b).map(|(a, b)| a - b).collect();
    for i in 0..xs.len().saturating_sub(1) {
        let (d0, d1) = (diff[i], diff[i + 1]);
        if d0 == 0.0 {
            return Some(xs[i]);
        }
        if d0 * d1 < 0.0 {
            return Some(xs[i] + (xs[i + 1] - xs[i]) * d0 / (d0 - d1));
        }
    }
    (diff.last() == Some(&0.0)).then(|| xs[xs.len() - 1])
}

/// Crossings of consecutive curves (ordered by code size).
pub fn crossings(xs: &[f64], curves: &[Vec<f64>]) -> Vec<Option<f64>> {
    curves.windows(2).map(|w| crossing(xs, &w[0], &w[1])).collect()
}
