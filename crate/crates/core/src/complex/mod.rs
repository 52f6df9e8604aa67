//! Chain complexes over GF(2) and the lattice families built on them.

mod cubical;
mod rotated;
mod subdivide;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::gf2::{self, BitMatrix};
use crate::{Error, Result};

pub use cubical::{build_tesseract, build_toric_2d, build_toric_4d, Axis, CubicalLattice};
pub use rotated::build_rotated_toric;
pub use subdivide::semi_hyperbolic;

/// Lattice label of a cell: base vertex plus the axes it extends along.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellCoord {
    pub coords: Vec<usize>,
    pub dirs: Vec<usize>,
}

/// Family name and construction parameters carried along for provenance.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub family: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
}

impl Meta {
    pub fn new(family: &str) -> Self {
        Self { family: family.to_owned(), parameters: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }
}

/// Cells at levels `0..=D` linked by boundary maps.
///
/// `boundary(i)` has one row per (i-1)-cell and one column per i-cell.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    sizes: Vec<usize>,
    boundaries: Vec<BitMatrix>,
    labels: Vec<Option<Vec<CellCoord>>>,
    pub meta: Meta,
}

impl PartialEq for ChainComplex {
    fn eq(&self, other: &Self) -> bool {
        self.sizes == other.sizes && self.boundaries == other.boundaries
    }
}

impl ChainComplex {
    /// `boundaries[i-1]` is ∂ᵢ. Shapes must chain; ∂∂=0 is not enforced here.
    pub fn new(sizes: Vec<usize>, boundaries: Vec<BitMatrix>, meta: Meta) -> Result<Self> {
        if sizes.is_empty() || boundaries.len() + 1 != sizes.len() {
            return Err(Error::InvalidInput(format!(
                "{} levels need {} boundary maps, got {}",
                sizes.len(),
                sizes.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != sizes[i] || b.cols() != sizes[i + 1] {
                return Err(Error::InvalidInput(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    i + 1,
                    b.rows(),
                    b.cols(),
                    sizes[i],
                    sizes[i + 1]
                )));
            }
        }
        let labels = vec![None; sizes.len()];
        Ok(Self { sizes, boundaries, labels, meta })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Option<Vec<CellCoord>>>) -> Self {
        debug_assert_eq!(labels.len(), self.sizes.len());
        self.labels = labels;
        self
    }

    pub fn dimension(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, level: usize) -> usize {
        self.sizes[level]
    }

    /// ∂ᵢ for `1 <= i <= D`.
    pub fn boundary(&self, i: usize) -> &BitMatrix {
        assert!(i >= 1 && i <= self.dimension(), "no boundary map at level {i}");
        &self.boundaries[i - 1]
    }

    pub fn boundaries(&self) -> &[BitMatrix] {
        &self.boundaries
    }

    pub fn labels(&self, level: usize) -> Option<&[CellCoord]> {
        self.labels[level].as_deref()
    }

    /// Levels reversed and every boundary transposed.
    pub fn dual(&self) -> ChainComplex {
        let d = self.dimension();
        let sizes = self.sizes.iter().rev().copied().collect();
        let boundaries = (1..=d).map(|i| self.boundary(d - i + 1).transpose()).collect();
        let labels = self.labels.iter().rev().cloned().collect();
        let mut meta = self.meta.clone();
        if meta.parameters.remove("dual").is_none() {
            meta.parameters.insert("dual".into(), true.into());
        }
        ChainComplex { sizes, boundaries, labels, meta }
    }

    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..self.dimension()).all(|i| self.boundary(i).mul(self.boundary(i + 1)).is_zero())
    }

    /// For every (i+1)-cell and (i-1)-cell, the number of i-cells incident to both.
    /// Returns the set of distinct counts seen over all pairs sharing at least one i-cell.
    pub fn incidence_counts(&self) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        for i in 1..self.dimension() {
            let lower = self.boundary(i).transpose();
            let upper = self.boundary(i + 1).transpose();
            let mut count = vec![0usize; self.size(i - 1)];
            for c in 0..upper.rows() {
                let mut touched = Vec::new();
                for &e in upper.row(c) {
                    for &v in lower.row(e) {
                        if count[v] == 0 {
                            touched.push(v);
                        }
                        count[v] += 1;
                    }
                }
                for v in touched {
                    seen.insert(count[v]);
                    count[v] = 0;
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Every incident pair of cells two levels apart meets in exactly two intermediate cells.
    pub fn has_diamond_property(&self) -> bool {
        self.incidence_counts().iter().all(|&c| c == 2)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.sizes)
    }

    fn rank_of(&self, i: usize) -> usize {
        if i == 0 || i > self.dimension() {
            0
        } else {
            gf2::rank(self.boundary(i))
        }
    }

    /// dim Hᵢ = dim ker ∂ᵢ − rank ∂ᵢ₊₁.
    pub fn betti(&self, i: usize) -> usize {
        self.size(i) - self.rank_of(i) - self.rank_of(i + 1)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.dimension() + 1).map(|i| self.rank_of(i)).collect();
        (0..=self.dimension()).map(|i| self.size(i) - ranks[i] - ranks[i + 1]).collect()
    }

    /// Relabels cells: `perms[i][old] = new` at level i.
    pub fn permuted(&self, perms: &[Vec<usize>]) -> ChainComplex {
        assert_eq!(perms.len(), self.sizes.len());
        let boundaries = (1..=self.dimension())
            .map(|i| self.boundary(i).permute(&perms[i - 1], &perms[i]))
            .collect();
        ChainComplex {
            sizes: self.sizes.clone(),
            boundaries,
            labels: vec![None; self.sizes.len()],
            meta: self.meta.clone(),
        }
    }

    /// Endpoints of each edge, from ∂₁. Edges with a single surviving endpoint
    /// (relative complexes) report `None` for the missing one.
    pub fn edge_endpoints(&self) -> Vec<(usize, Option<usize>)> {
        let b = self.boundary(1).transpose();
        (0..b.rows())
            .map(|e| match b.row(e) {
                [u, v] => (*u, Some(*v)),
                [u] => (*u, None),
                other => panic!("edge {e} has {} endpoints", other.len()),
            })
            .collect()
    }
}

pub(crate) fn alternating_sum(values: &[usize]) -> i64 {
    values.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) }).sum()
}
