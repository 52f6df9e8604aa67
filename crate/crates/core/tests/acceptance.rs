//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails. Pass criterion numbers as
//! arguments to run a subset, e.g. `cargo test --test acceptance -- 1 5`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use homcode::analytic::{low_p_failure_approx, threshold_lower_bound, TessellationParams};
use homcode::code::{CssCode, Pauli};
use homcode::complex::{build_rotated_toric, build_tesseract, build_toric_2d, build_toric_4d, semi_hyperbolic, ChainComplex};
use homcode::coxeter::{build_constant_distance_surface, DEFAULT_MAX_COSETS};
use homcode::decode::{CaRule, MwpmDecoder};
use homcode::distance::{brute_force_distance, count_min_weight_logicals, distance};
use homcode::gf2::BitVector;
use homcode::sim::{crossing, run_2d_perfect, run_4d_memory, trial_rng, Decoder2d, MemoryConfig, NoiseModel};
use rand::Rng;

use common::{brute_force_pairing, hyperbolic, isomorphic};

/// Outcome of one criterion: pass flag and a one-line summary.
type Verdict = (bool, String);

fn d_pair(code: &CssCode) -> (usize, usize) {
    let lb = code.logical_basis().unwrap();
    (distance(code, lb, Pauli::Z).unwrap().0, distance(code, lb, Pauli::X).unwrap().0)
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| lo + step * i as f64).collect()
}

fn pct2(x: f64) -> String {
    let v = x * 100.0;
    let digits = (1 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.digits$}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or("none".into(), |v| format!("{v:.4}"))
}

fn zoo() -> Verdict {
    let table: [(usize, usize, usize, usize, [(usize, usize); 2]); 9] = [
        (5, 4, 30, 5, [(3, 10), (4, 75)]),
        (5, 4, 160, 18, [(8, 500), (6, 320)]),
        (5, 4, 360, 38, [(8, 90), (8, 5670)]),
        (5, 4, 1800, 182, [(10, 180), (10, 32320)]),
        (5, 5, 40, 10, [(4, 40), (4, 40)]),
        (5, 5, 80, 18, [(5, 160), (5, 160)]),
        (5, 5, 150, 32, [(6, 500), (6, 500)]),
        (5, 5, 900, 182, [(8, 4725), (8, 4725)]),
        (7, 7, 28, 14, [(3, 56), (3, 56)]),
    ];
    let mut mismatches = Vec::new();
    for (r, s, n, k, expected) in table {
        let code = hyperbolic(r, s, n);
        let lb = code.logical_basis().unwrap();
        let got = [count_min_weight_logicals(&code, lb, Pauli::Z).unwrap(), count_min_weight_logicals(&code, lb, Pauli::X).unwrap()];
        if code.n() != n || code.k() != k || got != expected {
            mismatches.push(format!("{{{r},{s}}} n={n}: got [[{},{}]] {got:?}, expected [[{n},{k}]] {expected:?}", code.n(), code.k()));
        }
    }
    (mismatches.is_empty(), if mismatches.is_empty() { "9 codes exact".into() } else { mismatches.join("; ") })
}

fn closed_forms() -> Verdict {
    let mut bad = Vec::new();
    for l in [2, 4, 6] {
        let t = CssCode::from_complex(&build_toric_2d(l).unwrap(), 1).unwrap();
        if (t.n(), t.k(), d_pair(&t)) != (2 * l * l, 2, (l, l)) {
            bad.push(format!("toric2d {l}"));
        }
        let r = CssCode::from_complex(&build_rotated_toric(l).unwrap(), 1).unwrap();
        if (r.n(), r.k(), d_pair(&r)) != (l * l, 2, (l, l)) {
            bad.push(format!("rotated {l}"));
        }
    }
    let binom = [1, 4, 6, 4, 1];
    for l in [2usize, 3] {
        let c = build_toric_4d(l).unwrap();
        let counts: Vec<usize> = binom.iter().map(|b| b * l.pow(4)).collect();
        let code = CssCode::from_complex(&c, 2).unwrap();
        if c.sizes() != counts.as_slice() || code.k() != 6 {
            bad.push(format!("toric4d {l}"));
        }
        let t = build_tesseract(l).unwrap();
        let n = 6 * l.pow(4) - 12 * l.pow(3) + 10 * l * l - 4 * l + 1;
        let code = CssCode::from_complex(&t, 2).unwrap();
        if t.size(2) != n || code.k() != 1 || t.betti(1) != 0 {
            bad.push(format!("tesseract {l}"));
        }
    }
    for c in [build_toric_4d(2).unwrap(), build_tesseract(2).unwrap()] {
        let code = CssCode::from_complex(&c, 2).unwrap();
        for t in [Pauli::Z, Pauli::X] {
            if brute_force_distance(&code, t, 4).unwrap() != Some(4) {
                bad.push(format!("{} brute-force {t:?}", c.meta.family));
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { "toric2d, rotated, toric4d, tesseract exact".into() } else { bad.join(", ") })
}

fn constant_distance() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (l, edges) in [(2, 192), (3, 648)] {
        let code = CssCode::from_complex(&build_constant_distance_surface(6, l, DEFAULT_MAX_COSETS).unwrap(), 1).unwrap();
        let (dz, dx) = d_pair(&code);
        ok &= code.n() == edges && dz.min(dx) <= 4;
        parts.push(format!("L={l}: n={} d={}", code.n(), dz.min(dx)));
    }
    (ok, parts.join(", "))
}

fn semi() -> Verdict {
    let mut ok = true;
    for l in [2, 3] {
        for k in [2, 3] {
            ok &= isomorphic(&semi_hyperbolic(&build_toric_2d(l).unwrap(), k).unwrap(), &build_toric_2d(k * l).unwrap());
        }
    }
    let base: ChainComplex = hyperbolic(5, 4, 30).complex().dual();
    let mut dz = Vec::new();
    for l in 1..=3 {
        let code = CssCode::from_complex(&semi_hyperbolic(&base, l).unwrap(), 1).unwrap();
        ok &= code.n() == 30 * l * l && code.k() == 5;
        dz.push(d_pair(&code).0);
    }
    let linear = (1..=3).all(|l| dz[l - 1] == l * dz[0]);
    let note = if linear { "d_Z linear in l".to_string() } else { format!("logged: d_Z(l) = {dz:?}, not l*d_Z(1)") };
    (ok, format!("flat refinements isomorphic, n=30l^2 k=5; {note}"))
}

fn bounds() -> Verdict {
    let pair = |r, s, c| {
        let p = TessellationParams::new(r, s, 0).with_c(c);
        (pct2(threshold_lower_bound(&p, false).unwrap()), pct2(threshold_lower_bound(&p, true).unwrap()))
    };
    let a = pair(5, 4, 1.77);
    let b = pair(5, 5, 1.21);
    let ok = a == ("0.51".into(), "0.073".into()) && b == ("0.30".into(), "0.025".into());
    (ok, format!("{{5,4}} c=1.77: {}%/{}% (want 0.51/0.073); {{5,5}} c=1.21: {}%/{}% (want 0.30/0.025)", a.0, a.1, b.0, b.1))
}

fn perfect_curve(code: &CssCode, ps: &[f64], trials: u64, seed: u64) -> Vec<f64> {
    let lb = code.logical_basis().unwrap();
    let dec = Decoder2d::new(code, lb).unwrap();
    ps.iter().map(|&p| dec.run_perfect(p, trials, seed).unwrap().p_bar).collect()
}

fn toric_threshold() -> Verdict {
    let ps = grid(0.090, 0.115, 0.005);
    let sizes = [4, 6, 8];
    let curves: Vec<Vec<f64>> =
        sizes.iter().map(|&l| perfect_curve(&CssCode::from_complex(&build_toric_2d(l).unwrap(), 1).unwrap(), &ps, 20_000, 61)).collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let x = crossing(&ps, &curves[i], &curves[j]);
            ok &= x.is_some_and(|x| (0.093..=0.113).contains(&x));
            parts.push(format!("L{}/{}: {}", sizes[i], sizes[j], fmt_opt(x)));
        }
    }
    (ok, parts.join(", "))
}

fn hyperbolic_threshold() -> Verdict {
    let ps = grid(0.01, 0.04, 0.005);
    let curves: Vec<Vec<f64>> = [30, 160, 360].iter().map(|&n| perfect_curve(&hyperbolic(5, 4, n), &ps, 40_000, 71)).collect();
    let x = crossing(&ps, &curves[1], &curves[2]);
    let small = crossing(&ps, &curves[0], &curves[1]);
    (x.is_some_and(|x| (0.015..=0.035).contains(&x)), format!("n160/360: {} (n30/160: {})", fmt_opt(x), fmt_opt(small)))
}

fn noisy_threshold() -> Verdict {
    let ps = grid(0.008, 0.02, 0.002);
    let curves: Vec<Vec<f64>> = [160, 360]
        .iter()
        .map(|&n| {
            let code = hyperbolic(5, 4, n);
            let (dz, dx) = d_pair(&code);
            let dec = Decoder2d::new(&code, code.logical_basis().unwrap()).unwrap();
            ps.iter().map(|&p| dec.run_noisy(NoiseModel::symmetric(p), dz.min(dx) as u32, 10_000, 81).unwrap().p_round).collect()
        })
        .collect();
    let x = crossing(&ps, &curves[0], &curves[1]);
    (x.is_some_and(|x| (0.010..=0.018).contains(&x)), format!("P_round n160/360: {}", fmt_opt(x)))
}

fn low_p() -> Verdict {
    let code = hyperbolic(5, 4, 30);
    let lb = code.logical_basis().unwrap();
    let dec = Decoder2d::new(&code, lb).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [5e-4, 1e-3] {
        let z = dec.run_side_until(p, Pauli::Z, 100, 100_000_000, 1_000_000, 91).unwrap();
        let approx = low_p_failure_approx(10.0, 3, p, 1);
        let rel = (z.p_bar - approx).abs() / approx;
        ok &= z.trials >= 1_000_000 && z.failures() >= 100 && rel <= 0.15;
        let both = dec.run_perfect(p, 1_000_000, 92).unwrap();
        parts.push(format!("p={p}: Z-side MC {:.3e} ({} fails) vs {approx:.3e} ({:.1}%), both sides {:.3e}", z.p_bar, z.failures(), 100.0 * rel, both.p_bar));
    }
    (ok, parts.join("; "))
}

fn memory_crossing(rule: CaRule, ps: &[f64], noisy: bool, seed: u64) -> (Option<f64>, Vec<Vec<f64>>) {
    let curves: Vec<Vec<f64>> = [4, 5]
        .iter()
        .map(|&l| {
            let code = CssCode::from_complex(&build_toric_4d(l).unwrap(), 2).unwrap();
            ps.iter()
                .map(|&p| {
                    let noise = if noisy { NoiseModel::symmetric(p) } else { NoiseModel::perfect(p) };
                    run_4d_memory(&code, MemoryConfig::new(rule, noise), 4_000, seed).unwrap().mean
                })
                .collect()
        })
        .collect();
    (crossing(ps, &curves[0], &curves[1]), curves)
}

fn ca(rule: CaRule, perfect: (&[f64], (f64, f64)), noisy: (&[f64], (f64, f64)), seed: u64) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, (ps, (lo, hi)), is_noisy) in [("perfect", perfect, false), ("noisy", noisy, true)] {
        let (x, curves) = memory_crossing(rule, ps, is_noisy, seed);
        ok &= x.is_some_and(|x| (lo..=hi).contains(&x));
        let means: Vec<String> = curves.iter().map(|c| c.iter().map(|m| format!("{m:.0}")).collect::<Vec<_>>().join("/")).collect();
        parts.push(format!("{label}: {} in [{lo}, {hi}]? (L4 {}; L5 {})", fmt_opt(x), means[0], means[1]));
    }
    (ok, parts.join("; "))
}

fn toom() -> Verdict {
    ca(CaRule::Toom, (&grid(0.008, 0.012, 0.001), (0.0085, 0.0105)), (&grid(0.006, 0.010, 0.001), (0.0065, 0.0085)), 101)
}

fn dklp() -> Verdict {
    ca(CaRule::Dklp, (&grid(0.004, 0.007, 0.001), (0.0045, 0.0065)), (&grid(0.004, 0.006, 0.001), (0.0035, 0.0055)), 111)
}

fn properties() -> Verdict {
    let mut bad = Vec::new();
    let complexes: Vec<ChainComplex> = vec![
        build_toric_2d(3).unwrap(),
        build_rotated_toric(4).unwrap(),
        build_toric_4d(2).unwrap(),
        build_tesseract(2).unwrap(),
        semi_hyperbolic(&build_toric_2d(2).unwrap(), 2).unwrap(),
        build_constant_distance_surface(6, 2, DEFAULT_MAX_COSETS).unwrap(),
        hyperbolic(5, 4, 160).complex().clone(),
        hyperbolic(5, 5, 40).complex().clone(),
    ];
    for c in &complexes {
        let name = &c.meta.family;
        if !c.boundary_squared_is_zero() {
            bad.push(format!("{name}: boundary squared"));
        }
        let counts = c.incidence_counts();
        let parity = if name == "tesseract" { counts.iter().all(|&k| k % 2 == 0 || k == 1) } else { counts == [2] };
        if !parity {
            bad.push(format!("{name}: incidences {counts:?}"));
        }
        let level = if c.dimension() == 4 { 2 } else { 1 };
        let code = CssCode::from_complex(c, level).unwrap();
        if !code.h_x().mul(&code.h_z().transpose()).is_zero() {
            bad.push(format!("{name}: checks do not commute"));
        }
        let pairing = code.logical_basis().unwrap().pairing();
        if (0..code.k()).any(|i| (0..code.k()).any(|j| pairing[i][j] != (i == j))) {
            bad.push(format!("{name}: pairing"));
        }
    }

    let code = hyperbolic(5, 4, 160);
    let mut rng = trial_rng(12, 0);
    for t in [Pauli::Z, Pauli::X] {
        let dec = MwpmDecoder::new(&code, t).unwrap();
        let checks = code.checks_for(t).rows();
        for _ in 0..30 {
            let m = 2 * rng.gen_range(0..=5);
            let mut marks: Vec<usize> = Vec::new();
            while marks.len() < m {
                let v = rng.gen_range(0..checks);
                if !marks.contains(&v) {
                    marks.push(v);
                }
            }
            let syndrome = BitVector::from_indices(checks, marks.iter().copied());
            let best = brute_force_pairing(m, &|i, j| dec.distance(marks[i], marks[j]), None).unwrap();
            if dec.matching_weight(&syndrome).unwrap() as u64 != best {
                bad.push(format!("matching not optimal on {marks:?}"));
            }
            let correction = dec.decode(&syndrome).unwrap();
            if code.syndrome(&correction, t).unwrap() != syndrome {
                bad.push("decoder syndrome mismatch".into());
            }
        }
    }

    let lb = code.logical_basis().unwrap();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| run_2d_perfect(&code, lb, 0.03, 3000, 5).unwrap())
    };
    if run(1) != run(4) {
        bad.push("1 vs 4 threads differ".into());
    }
    (bad.is_empty(), if bad.is_empty() { format!("{} complexes, 60 matchings, thread determinism", complexes.len()) } else { bad.join("; ") })
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdict); 12] = [
        (1, "hyperbolic code zoo", zoo),
        (2, "closed-form families", closed_forms),
        (3, "constant-distance family", constant_distance),
        (4, "semi-hyperbolic invariants", semi),
        (5, "threshold lower bounds", bounds),
        (6, "toric 2D threshold", toric_threshold),
        (7, "{5,4} perfect threshold", hyperbolic_threshold),
        (8, "{5,4} noisy threshold", noisy_threshold),
        (9, "low-p approximation", low_p),
        (10, "4D Toom crossover", toom),
        (11, "4D DKLP crossover", dklp),
        (12, "property suites", properties),
    ];
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        return;
    }
    let wanted: Vec<u32> = args.iter().filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for (id, name, check) in criteria {
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let (pass, detail) = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            (false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        println!("criterion {id:>2} {}: {name}: {detail} [{:.1}s]", if pass { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
        if !pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all selected criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
