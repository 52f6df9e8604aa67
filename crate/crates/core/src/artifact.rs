//! JSON serialization of complexes and codes.
//!
//! Matrices are stored as ascending lists of nonzero `[row, col]` entries.
//! Output is byte-stable for a fixed input.

use serde::{Deserialize, Serialize};

use crate::code::{CssCode, LogicalBasis};
use crate::complex::{ChainComplex, Meta};
use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};

type Entries = Vec<[usize; 2]>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogicalEntries {
    pub x: Entries,
    pub z: Entries,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeArtifact {
    pub dimension: usize,
    pub levels: Vec<usize>,
    pub boundaries: Vec<Entries>,
    pub qubit_level: usize,
    pub meta: Meta,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_x: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_z: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logicals: Option<LogicalEntries>,
}

fn entries(m: &BitMatrix) -> Entries {
    let mut out: Entries = m.entries().map(|(r, c)| [r, c]).collect();
    out.sort_unstable();
    out
}

fn vector_entries(vs: &[BitVector]) -> Entries {
    vs.iter().enumerate().flat_map(|(i, v)| v.ones().map(move |q| [i, q])).collect()
}

fn matrix(rows: usize, cols: usize, e: &Entries, what: &str) -> Result<BitMatrix> {
    let mut sorted = e.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!("{what}: repeated entry")));
    }
    if let Some([r, c]) = sorted.iter().find(|[r, c]| *r >= rows || *c >= cols) {
        return Err(Error::Parse(format!("{what}: entry [{r}, {c}] outside {rows}x{cols}")));
    }
    Ok(BitMatrix::from_entries(rows, cols, sorted.into_iter().map(|[r, c]| (r, c))))
}

impl CodeArtifact {
    /// Complex only; `qubit_level` is recorded but no code sections are added.
    pub fn from_complex(c: &ChainComplex, qubit_level: usize) -> Self {
        Self {
            dimension: c.dimension(),
            levels: c.sizes().to_vec(),
            boundaries: c.boundaries().iter().map(entries).collect(),
            qubit_level,
            meta: c.meta.clone(),
            h_x: None,
            h_z: None,
            logicals: None,
        }
    }

    /// Complex plus check matrices, and the logical basis when `with_logicals` and k > 0.
    pub fn from_code(code: &CssCode, with_logicals: bool) -> Result<Self> {
        let mut a = Self::from_complex(code.complex(), code.qubit_level());
        a.h_x = Some(entries(code.h_x()));
        a.h_z = Some(entries(code.h_z()));
        if with_logicals && code.k() > 0 {
            let l: &LogicalBasis = code.logical_basis()?;
            a.logicals = Some(LogicalEntries { x: vector_entries(&l.x), z: vector_entries(&l.z) });
        }
        Ok(a)
    }

    pub fn to_complex(&self) -> Result<ChainComplex> {
        if self.levels.len() != self.dimension + 1 || self.boundaries.len() != self.dimension {
            return Err(Error::Parse("level and boundary counts disagree with the dimension".into()));
        }
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(i, e)| matrix(self.levels[i], self.levels[i + 1], e, &format!("boundary {}", i + 1)))
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(self.levels.clone(), boundaries, self.meta.clone())
    }

    /// Rebuilds the code and checks any stored check matrices against it.
    pub fn to_code(&self) -> Result<CssCode> {
        let code = CssCode::from_complex(&self.to_complex()?, self.qubit_level)?;
        for (stored, actual, name) in [(&self.h_x, code.h_x(), "h_x"), (&self.h_z, code.h_z(), "h_z")] {
            if let Some(e) = stored {
                if *e != entries(actual) {
                    return Err(Error::Parse(format!("{name} does not match the boundary maps")));
                }
            }
        }
        Ok(code)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
