//! Euclidean surface codes: the toric code and its rotated variant.
//!
//! Prints [[n, k, d]], check weights and the homology of each complex,
//! then decodes one random error with matching.

use homcode::code::{CssCode, Pauli};
use homcode::complex::{build_rotated_toric, build_toric_2d};
use homcode::decode::mwpm_decode_2d;
use homcode::distance::distance;
use homcode::gf2::BitVector;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> homcode::Result<()> {
    println!("{:>8} {:>3} {:>5} {:>3} {:>3} {:>10}", "family", "L", "n", "k", "d", "betti");
    for l in [2, 4, 6, 8] {
        for (name, complex) in [("toric", build_toric_2d(l)?), ("rotated", build_rotated_toric(l)?)] {
            let code = CssCode::from_complex(&complex, 1)?;
            let logicals = code.logical_basis()?;
            let (dz, _) = distance(&code, logicals, Pauli::Z)?;
            let (dx, _) = distance(&code, logicals, Pauli::X)?;
            println!("{name:>8} {l:>3} {:>5} {:>3} {:>3} {:>10?}", code.n(), code.k(), dz.min(dx), complex.betti_numbers());
        }
    }

    let code = CssCode::from_complex(&build_toric_2d(8)?, 1)?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(7);
    let error = BitVector::from_indices(code.n(), (0..code.n()).filter(|_| rng.gen_bool(0.05)));
    let syndrome = code.syndrome(&error, Pauli::Z)?;
    let correction = mwpm_decode_2d(&code, &syndrome, Pauli::Z)?;
    let residual = error.xor(&correction);
    println!(
        "\nL=8, {} Z errors, {} marked checks: residual syndrome zero = {}, logical failure = {}",
        error.weight(),
        syndrome.weight(),
        code.syndrome(&residual, Pauli::Z)?.is_zero(),
        code.is_logical_failure(&residual, Pauli::Z)?
    );
    Ok(())
}
