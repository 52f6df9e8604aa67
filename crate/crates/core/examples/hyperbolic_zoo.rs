//! Closed hyperbolic surface codes from relator sets.
//!
//! Enumerates each quotient of G_{r,s}, builds the surface, and reports
//! [[n, k]], both distances and the number of minimum-weight logicals.
//!
//! ```sh
//! cargo run --release --example hyperbolic_zoo            # n <= 400
//! cargo run --release --example hyperbolic_zoo -- --all   # includes n = 900, 1800
//! ```

use std::time::Instant;

use homcode::code::{CssCode, Pauli};
use homcode::coxeter::{catalog, surface_from_relators, DEFAULT_MAX_COSETS};
use homcode::distance::count_min_weight_logicals;

fn main() -> homcode::Result<()> {
    let all = std::env::args().any(|a| a == "--all");
    println!("{:>6} {:>5} {:>5} {:>12} {:>12} {:>8}", "{r,s}", "n", "k", "d_Z (N)", "d_X (N)", "time");
    for q in catalog().iter().filter(|q| all || q.n <= 400) {
        let start = Instant::now();
        let surface = surface_from_relators(q.r, q.s, q.relators, DEFAULT_MAX_COSETS)?;
        let code = CssCode::from_complex(&surface, 1)?;
        let logicals = code.logical_basis()?;
        let (dz, nz) = count_min_weight_logicals(&code, logicals, Pauli::Z)?;
        let (dx, nx) = count_min_weight_logicals(&code, logicals, Pauli::X)?;
        println!(
            "{:>6} {:>5} {:>5} {:>12} {:>12} {:>7.1?}",
            format!("{{{},{}}}", q.r, q.s),
            code.n(),
            code.k(),
            format!("{dz} ({nz})"),
            format!("{dx} ({nx})"),
            start.elapsed()
        );
    }
    Ok(())
}
