use serde::{Deserialize, Serialize};

use super::{MemoryTimeResult, SimResult};

/// Code columns shared by the CSV schemas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

/// Ten significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.9e}")
}

pub fn sim_csv_header() -> &'static str {
    "family,n,k,d,p,q,T_rounds,trials,failures_logical,failures_stuck,p_bar,ci_lo,ci_hi,seed"
}

pub fn sim_csv_row(code: &CodeInfo, r: &SimResult) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        code.family,
        code.n,
        code.k,
        code.d.map_or(String::new(), |d| d.to_string()),
        format_float(r.noise.p),
        format_float(r.noise.q),
        r.rounds,
        r.trials,
        r.failures_logical,
        r.failures_stuck,
        format_float(r.p_bar),
        format_float(r.ci.0),
        format_float(r.ci.1),
        r.seed
    )
}

pub fn memory_csv_header() -> &'static str {
    "family,n,k,d,p,q,rule,sweeps,max_cycles,trials,failures_logical,failures_stuck,mean_T,stderr,censored,seed"
}

pub fn memory_csv_row(code: &CodeInfo, r: &MemoryTimeResult) -> String {
    let rule = serde_json::to_value(r.config.rule).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        code.family,
        code.n,
        code.k,
        code.d.map_or(String::new(), |d| d.to_string()),
        format_float(r.config.noise.p),
        format_float(r.config.noise.q),
        rule,
        r.config.sweeps,
        r.config.max_cycles,
        r.times.len(),
        r.failures_logical,
        r.failures_stuck,
        format_float(r.mean),
        format_float(r.stderr),
        r.censored,
        r.seed
    )
}
