//! Closed-form quantities for {r,s} surface codes: rate, distance bound,
//! threshold lower bounds and the low-p failure approximation.

use homcode::analytic::{
    distance_upper_bound, encoded_qubits, encoding_rate, low_p_failure_approx, p_max, threshold_lower_bound, TessellationParams,
};

fn main() -> homcode::Result<()> {
    println!("{:>6} {:>5} {:>8} {:>5} {:>8}", "{r,s}", "n", "rate", "k", "d <=");
    for (r, s, n) in [(5, 4, 160), (5, 4, 1800), (5, 5, 900), (7, 7, 28), (8, 3, 336)] {
        let t = TessellationParams::new(r, s, n);
        println!("{:>6} {n:>5} {:>8} {:>5} {:>8.2}", format!("{{{r},{s}}}"), encoding_rate(&t), encoded_qubits(&t), distance_upper_bound(&t)?);
    }

    println!("\nthreshold lower bounds");
    for (r, s, c) in [(5, 4, 1.77), (5, 5, 1.21)] {
        let t = TessellationParams::new(r, s, 0).with_c(c);
        println!(
            "  {{{r},{s}}} c={c}: perfect {:.2}%  noisy {:.3}%",
            100.0 * threshold_lower_bound(&t, false)?,
            100.0 * threshold_lower_bound(&t, true)?
        );
    }

    println!("\nlow-p approximation, {{5,4}} n=30 (d_Z=3, N=10; d_X=4, N=75)");
    for p in [5e-4, 1e-3] {
        let total = low_p_failure_approx(10.0, 3, p, 1) + low_p_failure_approx(75.0, 4, p, 1);
        println!("  p={p:e}: P ~ {total:.3e}");
    }
    println!("  p_max for P <= 1e-8 with d=10, N=180, T=10: {:.3e}", p_max(180.0, 10, 10, 1e-8)?);
    Ok(())
}
