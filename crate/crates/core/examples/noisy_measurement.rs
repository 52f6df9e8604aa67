//! Matching with noisy syndrome measurements on {5,4} codes.
//!
//! T = d rounds with measurement errors at rate q = p, then one perfect
//! round; reports the logical failure rate per round.
//!
//! ```sh
//! cargo run --release --example noisy_measurement -- [trials]
//! ```

use homcode::code::{CssCode, Pauli};
use homcode::coxeter::{surface_from_relators, KnownQuotient, DEFAULT_MAX_COSETS};
use homcode::distance::distance;
use homcode::sim::{crossing, run_2d_noisy, NoiseModel};

fn main() -> homcode::Result<()> {
    let trials = std::env::args().nth(1).and_then(|t| t.parse().ok()).unwrap_or(1000);
    let ps = [0.008, 0.012, 0.016, 0.02];
    let mut curves = Vec::new();
    for n in [160, 360] {
        let q = KnownQuotient::find(5, 4, n).expect("catalogued");
        let code = CssCode::from_complex(&surface_from_relators(5, 4, q.relators, DEFAULT_MAX_COSETS)?, 1)?;
        let logicals = code.logical_basis()?;
        let d = distance(&code, logicals, Pauli::Z)?.0.min(distance(&code, logicals, Pauli::X)?.0);
        println!("n={n} d={d} T={d}");
        let mut curve = Vec::new();
        for &p in &ps {
            let r = run_2d_noisy(&code, logicals, NoiseModel::symmetric(p), d as u32, trials, 5)?;
            println!("  p={p:.3}  P_bar={:.4}  P_round={:.5}", r.result.p_bar, r.p_round);
            curve.push(r.p_round);
        }
        curves.push(curve);
    }
    println!("P_round crossing: {:?}", crossing(&ps, &curves[0], &curves[1]));
    Ok(())
}
