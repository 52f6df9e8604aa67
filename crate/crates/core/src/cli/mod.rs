//! Command-line front end: build code artifacts, report parameters, run
//! Monte Carlo campaigns, fit thresholds and evaluate closed-form bounds.

mod args;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;

use crate::analytic::{low_p_failure_approx, p_max, threshold_lower_bound, TessellationParams};
use crate::artifact::CodeArtifact;
use crate::code::{CssCode, Pauli};
use crate::complex::{build_rotated_toric, build_tesseract, build_toric_2d, build_toric_4d, semi_hyperbolic, ChainComplex};
use crate::coxeter::{build_constant_distance_surface, surface_from_relators, KnownQuotient, DEFAULT_MAX_COSETS};
use crate::decode::CaRule;
use crate::distance::count_min_weight_logicals;
use crate::sim::{
    fit_threshold, memory_csv_header, memory_csv_row, run_4d_memory, sim_csv_header, sim_csv_row, CodeInfo, Decoder2d, FitModel, FitPoint,
    MemoryConfig, NoiseModel,
};
use crate::{Error, Result};

pub use args::{BuildArgs, Cli, Command, Family, Mode, ModelArg, RuleArg, SimulateArgs};

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing reports to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::InvalidInput(e.to_string()))?;
    execute(&cli, out)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    if let Some(threads) = cli.threads {
        // Only the first call in a process can size the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match &cli.command {
        Command::Build(a) => cmd_build(a, out),
        Command::Params { file, distance, count, json } => cmd_params(file, *distance || *count, *count, *json, out),
        Command::Distance { file, count, json } => cmd_params(file, true, *count, *json, out),
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::Fit { input, model, size } => cmd_fit(input, (*model).into(), size, out),
        Command::Bounds { r, s, c, n } => cmd_bounds(*r, *s, *c, *n, out),
        Command::Approx { nd, d, p, rounds, target } => cmd_approx(*nd, *d, *p, *rounds, *target, out),
    }
}

fn read_artifact(path: &Path) -> Result<CodeArtifact> {
    CodeArtifact::from_json(&std::fs::read_to_string(path)?)
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("{family} needs --{flag}")))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn build_complex(a: &BuildArgs) -> Result<(ChainComplex, usize)> {
    let f = a.family;
    let l = a.side;
    Ok(match f {
        Family::Toric2d => (build_toric_2d(need(l, "L", f)?)?, 1),
        Family::Rotated => (build_rotated_toric(need(l, "L", f)?)?, 1),
        Family::Toric4d => (build_toric_4d(need(l, "L", f)?)?, 2),
        Family::Tesseract => (build_tesseract(need(l, "L", f)?)?, 2),
        Family::Hyperbolic => {
            let (r, s) = (need(a.r, "r", f)?, need(a.s, "s", f)?);
            let relators = match (&a.relators, a.n) {
                (Some(text), _) => text.clone(),
                (None, Some(n)) => KnownQuotient::find(r, s, n)
                    .ok_or_else(|| Error::InvalidInput(format!("no catalogued {{{r},{s}}} quotient with n={n}")))?
                    .relators
                    .to_owned(),
                (None, None) => return Err(Error::InvalidInput("hyperbolic needs --relators or --n".into())),
            };
            (surface_from_relators(r, s, &relators, a.max_cosets.unwrap_or(DEFAULT_MAX_COSETS))?, 1)
        }
        Family::Semihyperbolic => {
            let base = read_artifact(need(a.input.as_deref(), "in", f)?)?;
            (semi_hyperbolic(&base.to_complex()?, need(a.l, "l", f)?)?, 1)
        }
        Family::ConstantDistance => {
            let c = build_constant_distance_surface(need(a.r, "r", f)?, need(l, "L", f)?, a.max_cosets.unwrap_or(DEFAULT_MAX_COSETS))?;
            (c, 1)
        }
        Family::Dual => {
            let base = read_artifact(need(a.input.as_deref(), "in", f)?)?;
            (base.to_complex()?.dual(), base.dimension - base.qubit_level)
        }
    })
}

fn cmd_build(a: &BuildArgs, out: &mut dyn Write) -> Result<()> {
    let (complex, default_level) = build_complex(a)?;
    let code = CssCode::from_complex(&complex, a.qubit_level.unwrap_or(default_level))?;
    let artifact = CodeArtifact::from_code(&code, !a.no_logicals)?;
    write_output(a.out.as_deref(), &artifact.to_json()?, out)
}

fn weights(m: &crate::gf2::BitMatrix) -> String {
    let mut w: Vec<usize> = (0..m.rows()).map(|r| m.row(r).len()).collect();
    w.sort_unstable();
    w.dedup();
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_params(file: &Path, distance: bool, count: bool, json: bool, out: &mut dyn Write) -> Result<()> {
    let code = read_artifact(file)?.to_code()?;
    let mut report = serde_json::Map::new();
    report.insert("n".into(), code.n().into());
    report.insert("k".into(), code.k().into());
    let mut line = format!("n={} k={}", code.n(), code.k());
    if distance && code.k() > 0 {
        let logicals = code.logical_basis()?;
        for (t, name) in [(Pauli::Z, "Z"), (Pauli::X, "X")] {
            if count {
                let (d, nd) = count_min_weight_logicals(&code, logicals, t)?;
                line += &format!(" d_{name}={d} N_{name}={nd}");
                report.insert(format!("d_{name}"), d.into());
                report.insert(format!("N_{name}"), nd.into());
            } else {
                let (d, _) = crate::distance::distance(&code, logicals, t)?;
                line += &format!(" d_{name}={d}");
                report.insert(format!("d_{name}"), d.into());
            }
        }
    }
    let qubit_degrees: Vec<usize> = {
        let (hx, hz) = (code.h_x().column_weights(), code.h_z().column_weights());
        let mut d: Vec<usize> = hx.iter().zip(&hz).map(|(a, b)| a + b).collect();
        d.sort_unstable();
        d.dedup();
        d
    };
    if json {
        report.insert("x_check_weights".into(), weights(code.h_x()).into());
        report.insert("z_check_weights".into(), weights(code.h_z()).into());
        report.insert("qubit_degrees".into(), serde_json::to_value(&qubit_degrees)?);
        writeln!(out, "{}", serde_json::Value::Object(report))?;
    } else {
        writeln!(out, "{line}")?;
        let degrees = qubit_degrees.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "x_check_weights={} z_check_weights={} qubit_degrees={degrees}", weights(code.h_x()), weights(code.h_z()))?;
    }
    Ok(())
}

fn code_info(artifact: &CodeArtifact, code: &CssCode, d: Option<usize>) -> CodeInfo {
    CodeInfo { family: artifact.meta.family.clone(), n: code.n(), k: code.k(), d }
}

fn cmd_simulate(a: &SimulateArgs, out: &mut dyn Write) -> Result<()> {
    if a.p.is_empty() {
        return Err(Error::InvalidInput("the p list is empty".into()));
    }
    if a.code.is_empty() {
        return Err(Error::InvalidInput("at least one --code file is required".into()));
    }
    let config = serde_json::to_string(a)?;
    let mut text = format!("# config: {config} version={}\n", env!("CARGO_PKG_VERSION"));
    text += if a.mode == Mode::Memory4d { memory_csv_header() } else { sim_csv_header() };
    text.push('\n');
    for path in &a.code {
        let artifact = read_artifact(path)?;
        let code = artifact.to_code()?;
        match a.mode {
            Mode::Perfect2d | Mode::Noisy2d => {
                let logicals = code.logical_basis()?;
                let dz = crate::distance::distance(&code, logicals, Pauli::Z)?.0;
                let dx = crate::distance::distance(&code, logicals, Pauli::X)?.0;
                let info = code_info(&artifact, &code, Some(dz.min(dx)));
                let decoder = Decoder2d::new(&code, logicals)?;
                for &p in &a.p {
                    let result = if a.mode == Mode::Perfect2d {
                        decoder.run_perfect(p, a.trials, a.seed)?
                    } else {
                        let noise = NoiseModel { p, q: a.q.unwrap_or(p) };
                        decoder.run_noisy(noise, a.rounds.unwrap_or(dz as u32), a.trials, a.seed)?.result
                    };
                    text += &sim_csv_row(&info, &result);
                    text.push('\n');
                }
            }
            Mode::Memory4d => {
                let info = code_info(&artifact, &code, None);
                for &p in &a.p {
                    let noise = NoiseModel { p, q: if a.noisy { a.q.unwrap_or(p) } else { 0.0 } };
                    let mut config = MemoryConfig::new(a.rule.map_or(CaRule::Toom, CaRule::from), noise);
                    config.sweeps = a.sweeps;
                    config.max_cycles = a.max_cycles;
                    config.v_max = a.v_max;
                    let result = run_4d_memory(&code, config, a.trials, a.seed)?;
                    text += &memory_csv_row(&info, &result);
                    text.push('\n');
                }
            }
        }
    }
    write_output(a.out.as_deref(), &text, out)
}

/// Reads fit points from a plain `p,L,y,sigma` table or from a campaign CSV,
/// whose size column is chosen by `size`.
pub fn read_fit_points(text: &str, size: &str) -> Result<Vec<FitPoint>> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    let header: Vec<&str> = lines.next().ok_or_else(|| Error::Parse("empty CSV".into()))?.split(',').map(str::trim).collect();
    let col = |name: &str| header.iter().position(|h| *h == name);
    let (pc, lc, yc, sc) = if let (Some(p), Some(l), Some(y)) = (col("p"), col("L"), col("y")) {
        (p, l, y, col("sigma"))
    } else if let (Some(p), Some(l), Some(y)) = (col("p"), col(size), col("mean_T")) {
        (p, l, y, col("stderr"))
    } else if let (Some(p), Some(l), Some(y)) = (col("p"), col(size), col("p_bar")) {
        (p, l, y, None)
    } else {
        return Err(Error::Parse(format!("unrecognised CSV header {header:?}")));
    };
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let num = |c: usize| -> Result<f64> {
            fields.get(c).ok_or_else(|| Error::Parse(format!("row {}: missing column {c}", i + 1)))?.parse().map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))
        };
        let sigma = match sc {
            Some(c) => num(c)?,
            None => 0.0,
        };
        points.push(FitPoint { p: num(pc)?, l: num(lc)?, y: num(yc)?, sigma });
    }
    Ok(points)
}

fn cmd_fit(input: &Path, model: FitModel, size: &str, out: &mut dyn Write) -> Result<()> {
    let points = read_fit_points(&std::fs::read_to_string(input)?, size)?;
    let fit = fit_threshold(&points, model)?;
    writeln!(out, "p_c={:.9e} stderr={:.3e} nu={:.6} residual={:.6e}", fit.p_c, fit.p_c_stderr(), fit.nu, fit.residual)?;
    writeln!(out, "coefficients={:.9e},{:.9e},{:.9e}", fit.coefficients[0], fit.coefficients[1], fit.coefficients[2])?;
    Ok(())
}

fn percent(x: f64) -> String {
    let pct = x * 100.0;
    let digits = (1 - pct.abs().log10().floor() as i32).max(0) as usize;
    format!("{pct:.digits$}%")
}

fn cmd_bounds(r: usize, s: usize, c: f64, n: Option<usize>, out: &mut dyn Write) -> Result<()> {
    let params = TessellationParams::new(r, s, n.unwrap_or(0)).with_c(c);
    let perfect = threshold_lower_bound(&params, false)?;
    let noisy = threshold_lower_bound(&params, true)?;
    writeln!(out, "perfect {} noisy {}", percent(perfect), percent(noisy))?;
    if let Some(n) = n {
        let rate = crate::analytic::encoding_rate(&params);
        writeln!(out, "rate {rate} k {} distance_bound {:.3}", rate * n as i64, crate::analytic::distance_upper_bound(&params)?)?;
    }
    Ok(())
}

/// Scientific notation with a two-digit signed exponent, e.g. `3e-05`.
pub fn format_sci(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.5e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
    let exp: i32 = exp.parse().expect("integer exponent");
    format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
}

fn cmd_approx(nd: f64, d: u32, p: Option<f64>, rounds: u32, target: Option<f64>, out: &mut dyn Write) -> Result<()> {
    if p.is_none() && target.is_none() {
        return Err(Error::InvalidInput("approx needs --p or --target".into()));
    }
    if let Some(p) = p {
        writeln!(out, "{}", format_sci(low_p_failure_approx(nd, d, p, rounds)))?;
    }
    if let Some(t) = target {
        writeln!(out, "p_max {}", format_sci(p_max(nd, d, rounds, t)?))?;
    }
    Ok(())
}
