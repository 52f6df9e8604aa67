//! Semi-hyperbolic codes: refine every square face of a {4,5} surface into
//! an l×l grid. k is unchanged while both distances grow with l.
//!
//! ```sh
//! cargo run --release --example semi_hyperbolic            # bases n = 30, 160
//! cargo run --release --example semi_hyperbolic -- 360     # a chosen base
//! ```

use homcode::code::{CssCode, Pauli};
use homcode::complex::semi_hyperbolic;
use homcode::coxeter::{surface_from_relators, KnownQuotient, DEFAULT_MAX_COSETS};
use homcode::distance::distance;

fn main() -> homcode::Result<()> {
    let bases: Vec<usize> = match std::env::args().nth(1) {
        Some(n) => vec![n.parse().map_err(|e| homcode::Error::InvalidInput(format!("{e}")))?],
        None => vec![30, 160],
    };
    println!("{:>5} {:>3} {:>6} {:>4} {:>5} {:>5}", "n_h", "l", "n", "k", "d_Z", "d_X");
    for n_h in bases {
        let q = KnownQuotient::find(5, 4, n_h).ok_or_else(|| homcode::Error::InvalidInput(format!("no {{5,4}} quotient with n={n_h}")))?;
        // {4,5} base: the dual of the {5,4} surface has square faces.
        let base = surface_from_relators(5, 4, q.relators, DEFAULT_MAX_COSETS)?.dual();
        for l in 1..=3 {
            let code = CssCode::from_complex(&semi_hyperbolic(&base, l)?, 1)?;
            let logicals = code.logical_basis()?;
            let (dz, _) = distance(&code, logicals, Pauli::Z)?;
            let (dx, _) = distance(&code, logicals, Pauli::X)?;
            println!("{n_h:>5} {l:>3} {:>6} {:>4} {dz:>5} {dx:>5}", code.n(), code.k());
        }
    }
    Ok(())
}
