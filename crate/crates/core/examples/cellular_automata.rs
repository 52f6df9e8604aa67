//! Local decoders for the 4D toric code: Toom's rule and the DKLP rule.
//!
//! First relaxes a single random error configuration sweep by sweep, then
//! measures mean memory times at two sizes.
//!
//! ```sh
//! cargo run --release --example cellular_automata -- [trials]
//! ```

use homcode::code::CssCode;
use homcode::complex::build_toric_4d;
use homcode::decode::{sweep, Ca4Lattice, CaGrid4D, CaRule};
use homcode::gf2::BitVector;
use homcode::sim::{run_4d_memory, MemoryConfig, NoiseModel};
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> homcode::Result<()> {
    let trials = std::env::args().nth(1).and_then(|t| t.parse().ok()).unwrap_or(200);
    let lattice = Ca4Lattice::new(5)?;
    for rule in [CaRule::Toom, CaRule::Dklp] {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(1);
        let error = BitVector::from_indices(lattice.faces(), (0..lattice.faces()).filter(|_| rng.gen_bool(0.02)));
        let mut grid = CaGrid4D::from_error(&lattice, &error)?;
        let mut trace = vec![grid.syndrome_weight()];
        for _ in 0..12 {
            sweep(&mut grid, rule, &mut rng);
            trace.push(grid.syndrome_weight());
        }
        println!("{rule:?} L=5, syndrome weight per sweep: {trace:?}");
    }

    println!("\nmean memory time (cycles), perfect measurements, {trials} trials");
    println!("{:>6} {:>7} {:>10} {:>10}", "rule", "p", "L=3", "L=4");
    for rule in [CaRule::Toom, CaRule::Dklp] {
        for p in [0.006, 0.01, 0.014] {
            print!("{:>6} {p:>7.3}", format!("{rule:?}"));
            for l in [3, 4] {
                let code = CssCode::from_complex(&build_toric_4d(l)?, 2)?;
                let mut config = MemoryConfig::new(rule, NoiseModel::perfect(p));
                config.max_cycles = 2000;
                let r = run_4d_memory(&code, config, trials, 9)?;
                print!(" {:>10.1}", r.mean);
            }
            println!();
        }
    }
    Ok(())
}
