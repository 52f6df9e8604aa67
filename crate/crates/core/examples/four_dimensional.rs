//! 4D codes with qubits on faces: the 4D toric code and the tesseract code.
//!
//! Both have line-like syndromes (edges) whose boundaries vanish, which is
//! what lets local rules and syndrome repair work.

use homcode::code::{CssCode, Pauli};
use homcode::complex::{build_tesseract, build_toric_4d};
use homcode::decode::SyndromeRepair;
use homcode::distance::brute_force_distance;
use homcode::gf2::BitVector;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> homcode::Result<()> {
    println!("{:>10} {:>2} {:>22} {:>5} {:>3} {:>5}", "family", "L", "cells", "n", "k", "b_1");
    for l in [2, 3] {
        for (name, complex) in [("toric4d", build_toric_4d(l)?), ("tesseract", build_tesseract(l)?)] {
            let code = CssCode::from_complex(&complex, 2)?;
            println!("{name:>10} {l:>2} {:>22?} {:>5} {:>3} {:>5}", complex.sizes(), code.n(), code.k(), complex.betti(1));
        }
    }

    let code = CssCode::from_complex(&build_tesseract(2)?, 2)?;
    println!("\ntesseract L=2: brute-force Z distance up to 4 = {:?}", brute_force_distance(&code, Pauli::Z, 4)?);

    // Syndrome repair: a noisy measurement of a valid syndrome is projected
    // back onto closed edge sets.
    let code = CssCode::from_complex(&build_toric_4d(4)?, 2)?;
    let repair = SyndromeRepair::new(&code)?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
    let error = BitVector::from_indices(code.n(), (0..code.n()).filter(|_| rng.gen_bool(0.01)));
    let mut measured = code.syndrome(&error, Pauli::Z)?;
    let flips = (0..measured.len()).filter(|_| rng.gen_bool(0.01)).collect::<Vec<_>>();
    flips.iter().for_each(|&e| measured.flip(e));
    let repaired = repair.repair(&measured)?;
    let closed = code.complex().boundary(1).mul_vec(&repaired).is_zero();
    println!(
        "toric4d L=4: {} face errors, {} measurement flips, repaired syndrome closed = {closed}, edges changed = {}",
        error.weight(),
        flips.len(),
        repaired.xor(&measured).weight()
    );
    Ok(())
}
