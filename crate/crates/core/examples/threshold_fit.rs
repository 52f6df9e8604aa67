//! Finite-size scaling fit P = A + B x + C x², x = (p − p_c) L^{1/ν}, on
//! toric-code Monte Carlo data.
//!
//! ```sh
//! cargo run --release --example threshold_fit -- [trials]
//! ```

use homcode::code::CssCode;
use homcode::complex::build_toric_2d;
use homcode::sim::{fit_threshold, run_2d_perfect, FitModel, FitPoint};

fn main() -> homcode::Result<()> {
    let trials = std::env::args().nth(1).and_then(|t| t.parse().ok()).unwrap_or(10_000);
    let mut points = Vec::new();
    for l in [8, 10, 12] {
        let code = CssCode::from_complex(&build_toric_2d(l)?, 1)?;
        for p in [0.095, 0.1, 0.105, 0.11, 0.115] {
            let r = run_2d_perfect(&code, code.logical_basis()?, p, trials, 2)?;
            let sigma = (r.p_bar * (1.0 - r.p_bar) / trials as f64).sqrt().max(1.0 / trials as f64);
            println!("L={l:>2} p={p:.3} P_bar={:.4}", r.p_bar);
            points.push(FitPoint { p, l: l as f64, y: r.p_bar, sigma });
        }
    }
    let fit = fit_threshold(&points, FitModel::Logical)?;
    println!("\np_c = {:.4} ± {:.4}, nu = {:.3}, coefficients = {:.4?}", fit.p_c, fit.p_c_stderr(), fit.nu, fit.coefficients);
    Ok(())
}
