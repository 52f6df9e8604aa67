//! CSS codes from chain complexes.
//!
//! Qubits sit on the i-cells. X-checks are the (i−1)-cells (rows of ∂ᵢ) and
//! Z-checks the (i+1)-cells (rows of ∂ᵢ₊₁ᵀ). A Z error is detected by the
//! X-checks and vice versa.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::gf2::{self, BitMatrix, BitVector, Echelon};
use crate::{Error, Result};

/// Pauli type of an error or operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Z,
}

impl Pauli {
    pub fn other(self) -> Pauli {
        match self {
            Pauli::X => Pauli::Z,
            Pauli::Z => Pauli::X,
        }
    }
}

impl std::fmt::Display for Pauli {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pauli::X => "X",
            Pauli::Z => "Z",
        })
    }
}

/// Incrementally grown basis; each row is reduced against all earlier ones.
#[derive(Clone, Debug, Default)]
pub(crate) struct IncrementalBasis {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl IncrementalBasis {
    pub(crate) fn reduce(&self, v: &BitVector) -> BitVector {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    /// Adds `v` if it is independent; returns whether it was.
    pub(crate) fn insert(&mut self, v: &BitVector) -> bool {
        let r = self.reduce(v);
        match r.ones().next() {
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// Paired logical operators: `x[i] · z[j] = δᵢⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalBasis {
    pub x: Vec<BitVector>,
    pub z: Vec<BitVector>,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.x.len()
    }

    /// Logicals of type `t`.
    pub fn of(&self, t: Pauli) -> &[BitVector] {
        match t {
            Pauli::X => &self.x,
            Pauli::Z => &self.z,
        }
    }

    /// Overlap parities `x[i] · z[j]`.
    pub fn pairing(&self) -> Vec<Vec<bool>> {
        self.x.iter().map(|xi| self.z.iter().map(|zj| xi.dot(zj)).collect()).collect()
    }

    /// True iff an operator of type `t` flips some logical of the opposite type.
    pub fn anticommutes(&self, op: &BitVector, t: Pauli) -> bool {
        self.of(t.other()).iter().any(|l| l.dot(op))
    }
}

#[derive(Debug)]
pub struct CssCode {
    complex: Arc<ChainComplex>,
    qubit_level: usize,
    h_x: BitMatrix,
    h_z: BitMatrix,
    rank_x: usize,
    rank_z: usize,
    x_rowspace: OnceLock<Echelon>,
    z_rowspace: OnceLock<Echelon>,
    logicals: OnceLock<Result<LogicalBasis, String>>,
}

impl CssCode {
    pub fn from_complex(c: &ChainComplex, qubit_level: usize) -> Result<Self> {
        Self::from_shared(Arc::new(c.clone()), qubit_level)
    }

    pub fn from_shared(complex: Arc<ChainComplex>, qubit_level: usize) -> Result<Self> {
        let d = complex.dimension();
        if qubit_level == 0 || qubit_level >= d {
            return Err(Error::InvalidInput(format!("qubit level {qubit_level} outside 1..={}", d.saturating_sub(1))));
        }
        let h_x = complex.boundary(qubit_level).clone();
        let h_z = complex.boundary(qubit_level + 1).transpose();
        let rank_x = gf2::rank(&h_x);
        let rank_z = gf2::rank(&h_z);
        Ok(Self {
            complex,
            qubit_level,
            h_x,
            h_z,
            rank_x,
            rank_z,
            x_rowspace: OnceLock::new(),
            z_rowspace: OnceLock::new(),
            logicals: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.h_x.cols()
    }

    pub fn k(&self) -> usize {
        self.n() - self.rank_x - self.rank_z
    }

    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    pub fn qubit_level(&self) -> usize {
        self.qubit_level
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn shared_complex(&self) -> Arc<ChainComplex> {
        Arc::clone(&self.complex)
    }

    /// Checks that detect errors of type `t` (Z errors → X-checks).
    pub fn checks_for(&self, t: Pauli) -> &BitMatrix {
        match t {
            Pauli::Z => &self.h_x,
            Pauli::X => &self.h_z,
        }
    }

    /// Stabilizers of the same type as `t`.
    pub fn stabilizers_of(&self, t: Pauli) -> &BitMatrix {
        self.checks_for(t.other())
    }

    fn rowspace(&self, t: Pauli) -> &Echelon {
        let cell = match t {
            Pauli::X => &self.x_rowspace,
            Pauli::Z => &self.z_rowspace,
        };
        cell.get_or_init(|| Echelon::from_matrix(self.stabilizers_of(t)))
    }

    pub fn syndrome(&self, error: &BitVector, t: Pauli) -> Result<BitVector> {
        if error.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: error.len() });
        }
        Ok(self.checks_for(t).mul_vec(error))
    }

    /// True iff a zero-syndrome residual of type `t` is not a product of stabilizers.
    pub fn is_logical_failure(&self, residual: &BitVector, t: Pauli) -> Result<bool> {
        if !self.syndrome(residual, t)?.is_zero() {
            return Err(Error::Precondition("residual has a nonzero syndrome".into()));
        }
        Ok(!self.rowspace(t).contains(residual))
    }

    /// Same answer as [`Self::is_logical_failure`], computed by solving H·y = residual.
    pub fn is_logical_failure_by_solve(&self, residual: &BitVector, t: Pauli) -> Result<bool> {
        if !self.syndrome(residual, t)?.is_zero() {
            return Err(Error::Precondition("residual has a nonzero syndrome".into()));
        }
        Ok(gf2::solve(&self.stabilizers_of(t).transpose(), residual)?.is_none())
    }

    /// Symplectically paired logical operators; cached after the first call.
    pub fn logical_basis(&self) -> Result<&LogicalBasis> {
        if self.k() == 0 {
            return Err(Error::TrivialCode);
        }
        self.logicals.get_or_init(|| self.compute_logicals()).as_ref().map_err(|e| Error::Precondition(e.clone()))
    }

    fn representatives(&self, t: Pauli) -> Vec<BitVector> {
        let mut basis = IncrementalBasis::default();
        for row in self.stabilizers_of(t).row_vectors() {
            basis.insert(&row);
        }
        let mut out = Vec::with_capacity(self.k());
        for v in gf2::kernel_basis(self.checks_for(t)) {
            if out.len() == self.k() {
                break;
            }
            if basis.insert(&v) {
                out.push(v);
            }
        }
        out
    }

    fn compute_logicals(&self) -> Result<LogicalBasis, String> {
        let k = self.k();
        let x = self.representatives(Pauli::X);
        let z_tilde = self.representatives(Pauli::Z);
        if x.len() != k || z_tilde.len() != k {
            return Err("logical representatives do not span the homology".into());
        }
        let mut aug = Vec::with_capacity(k);
        for (i, xi) in x.iter().enumerate() {
            let mut row = BitVector::zeros(2 * k);
            for (j, zj) in z_tilde.iter().enumerate() {
                row.set(j, xi.dot(zj));
            }
            row.set(k + i, true);
            aug.push(row);
        }
        let ech = Echelon::new(2 * k, aug);
        if ech.pivots().iter().copied().take(k).ne(0..k) || ech.rank() < k {
            return Err("logical overlap matrix is singular".into());
        }
        // Z̄_j = Σ_l (M⁻¹)_{l j} Z̃_l.
        let inv = ech.rows();
        let z = (0..k)
            .map(|j| {
                let mut v = BitVector::zeros(self.n());
                for (l, zl) in z_tilde.iter().enumerate() {
                    if inv[l].get(k + j) {
                        v.xor_assign(zl);
                    }
                }
                v
            })
            .collect();
        Ok(LogicalBasis { x, z })
    }
}
