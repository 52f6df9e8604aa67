//! Perfect-measurement threshold of matching on toric and {5,4} codes.
//!
//! ```sh
//! cargo run --release --example matching_threshold -- [trials]
//! ```

use homcode::code::CssCode;
use homcode::complex::build_toric_2d;
use homcode::coxeter::{surface_from_relators, KnownQuotient, DEFAULT_MAX_COSETS};
use homcode::sim::{crossings, run_2d_perfect};

fn sweep(label: &str, codes: &[(String, CssCode)], ps: &[f64], trials: u64) -> homcode::Result<()> {
    println!("{label}");
    print!("{:>8}", "p");
    codes.iter().for_each(|(name, _)| print!("{name:>12}"));
    println!();
    let mut curves = vec![Vec::new(); codes.len()];
    for &p in ps {
        print!("{p:>8.4}");
        for (i, (_, code)) in codes.iter().enumerate() {
            let r = run_2d_perfect(code, code.logical_basis()?, p, trials, 11)?;
            print!("{:>12.5}", r.p_bar);
            curves[i].push(r.p_bar);
        }
        println!();
    }
    println!("crossings of consecutive sizes: {:?}\n", crossings(ps, &curves));
    Ok(())
}

fn main() -> homcode::Result<()> {
    let trials = std::env::args().nth(1).and_then(|t| t.parse().ok()).unwrap_or(5000);
    let toric = [4, 6, 8].iter().map(|&l| Ok((format!("L={l}"), CssCode::from_complex(&build_toric_2d(l)?, 1)?))).collect::<homcode::Result<Vec<_>>>()?;
    sweep("toric code", &toric, &[0.09, 0.095, 0.1, 0.105, 0.11, 0.115], trials)?;

    let hyperbolic = [160, 360]
        .iter()
        .map(|&n| {
            let q = KnownQuotient::find(5, 4, n).expect("catalogued");
            Ok((format!("n={n}"), CssCode::from_complex(&surface_from_relators(5, 4, q.relators, DEFAULT_MAX_COSETS)?, 1)?))
        })
        .collect::<homcode::Result<Vec<_>>>()?;
    sweep("{5,4} codes", &hyperbolic, &[0.015, 0.02, 0.025, 0.03, 0.035], trials)
}
