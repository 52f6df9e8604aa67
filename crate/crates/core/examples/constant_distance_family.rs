//! A {r,4} family whose code distance stays bounded while n grows.
//!
//! Opposite reflections of a face generate translations of order L; the
//! resulting surfaces always contain a short loop around one face pair.

use homcode::code::{CssCode, Pauli};
use homcode::coxeter::{build_constant_distance_surface, DEFAULT_MAX_COSETS};
use homcode::distance::distance;

fn main() -> homcode::Result<()> {
    println!("{:>3} {:>3} {:>6} {:>5} {:>4} {:>4}", "r", "L", "n", "k", "d_Z", "d_X");
    for (r, l) in [(6, 2), (6, 3), (8, 2)] {
        let surface = build_constant_distance_surface(r, l, DEFAULT_MAX_COSETS)?;
        let code = CssCode::from_complex(&surface, 1)?;
        let logicals = code.logical_basis()?;
        let (dz, _) = distance(&code, logicals, Pauli::Z)?;
        let (dx, _) = distance(&code, logicals, Pauli::X)?;
        println!("{r:>3} {l:>3} {:>6} {:>5} {dz:>4} {dx:>4}", code.n(), code.k());
    }
    Ok(())
}
