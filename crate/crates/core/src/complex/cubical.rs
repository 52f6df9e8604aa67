//! Cubical complexes on boxes and tori.

use super::{CellCoord, ChainComplex, Meta};
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// One lattice axis: `Periodic(L)` has L vertex positions and L edges,
/// `Open(m)` has positions `0..=m` and m edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Periodic(usize),
    Open(usize),
}

impl Axis {
    fn positions(self) -> usize {
        match self {
            Axis::Periodic(l) => l,
            Axis::Open(m) => m + 1,
        }
    }

    fn step(self, x: usize) -> Option<usize> {
        match self {
            Axis::Periodic(l) => Some((x + 1) % l),
            Axis::Open(m) => (x < m).then_some(x + 1),
        }
    }
}

/// Cells are (base vertex, ascending axis set). A cell lying entirely inside
/// a removed hyperplane is dropped, giving the relative complex.
pub struct CubicalLattice {
    axes: Vec<Axis>,
    removed: Vec<(usize, Vec<usize>)>,
    /// `index[level][flat * 2^D + mask]` is the cell id or `usize::MAX`.
    index: Vec<Vec<usize>>,
    cells: Vec<Vec<(usize, u32)>>,
}

impl CubicalLattice {
    /// `removed` lists (axis, positions) hyperplanes whose cells are deleted.
    pub fn new(axes: Vec<Axis>, removed: Vec<(usize, Vec<usize>)>) -> Self {
        let dim = axes.len();
        let total: usize = axes.iter().map(|a| a.positions()).product();
        let mut lattice = Self { axes, removed, index: vec![vec![usize::MAX; total << dim]; dim + 1], cells: vec![Vec::new(); dim + 1] };
        for flat in 0..total {
            let x = lattice.unflatten(flat);
            for level in 0..=dim {
                for mask in masks_of_size(dim, level) {
                    if lattice.exists(&x, mask) {
                        let id = lattice.cells[level].len();
                        lattice.cells[level].push((flat, mask));
                        lattice.index[level][(flat << dim) | mask as usize] = id;
                    }
                }
            }
        }
        lattice
    }

    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    pub fn count(&self, level: usize) -> usize {
        self.cells[level].len()
    }

    fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut x = vec![0; self.axes.len()];
        for (i, a) in self.axes.iter().enumerate().rev() {
            x[i] = flat % a.positions();
            flat /= a.positions();
        }
        x
    }

    fn flatten(&self, x: &[usize]) -> usize {
        x.iter().zip(&self.axes).fold(0, |acc, (&xi, a)| acc * a.positions() + xi)
    }

    fn exists(&self, x: &[usize], mask: u32) -> bool {
        for (i, a) in self.axes.iter().enumerate() {
            if mask & (1 << i) != 0 && a.step(x[i]).is_none() {
                return false;
            }
        }
        !self.removed.iter().any(|(axis, planes)| mask & (1 << axis) == 0 && planes.contains(&x[*axis]))
    }

    /// Id of the cell with base `x` spanning `dirs`, if it exists.
    pub fn cell_id(&self, x: &[usize], dirs: &[usize]) -> Option<usize> {
        let mask = dirs.iter().fold(0u32, |m, &d| m | (1 << d));
        let x: Vec<usize> = x.iter().zip(&self.axes).map(|(&xi, a)| xi % a.positions()).collect();
        let id = self.index[dirs.len()][(self.flatten(&x) << self.axes.len()) | mask as usize];
        (id != usize::MAX).then_some(id)
    }

    pub fn coord(&self, level: usize, id: usize) -> CellCoord {
        let (flat, mask) = self.cells[level][id];
        CellCoord { coords: self.unflatten(flat), dirs: (0..self.axes.len()).filter(|d| mask & (1 << d) != 0).collect() }
    }

    fn boundary_matrix(&self, level: usize) -> BitMatrix {
        let dim = self.axes.len();
        let mut entries = Vec::new();
        for (col, &(flat, mask)) in self.cells[level].iter().enumerate() {
            let x = self.unflatten(flat);
            for d in (0..dim).filter(|d| mask & (1 << d) != 0) {
                let face_mask = mask & !(1 << d);
                let mut far = x.clone();
                far[d] = self.axes[d].step(x[d]).expect("cell extends along d");
                for base in [&x, &far] {
                    let id = self.index[level - 1][(self.flatten(base) << dim) | face_mask as usize];
                    if id != usize::MAX {
                        entries.push((id, col));
                    }
                }
            }
        }
        BitMatrix::from_entries(self.count(level - 1), self.count(level), entries)
    }

    pub fn into_complex(self, meta: Meta) -> ChainComplex {
        let dim = self.dimension();
        let sizes = (0..=dim).map(|l| self.count(l)).collect();
        let boundaries = (1..=dim).map(|l| self.boundary_matrix(l)).collect();
        let labels = (0..=dim).map(|l| Some((0..self.count(l)).map(|id| self.coord(l, id)).collect())).collect();
        ChainComplex::new(sizes, boundaries, meta).expect("lattice shapes chain").with_labels(labels)
    }
}

fn masks_of_size(dim: usize, k: usize) -> Vec<u32> {
    // Lexicographic order of the sorted axis tuples.
    fn rec(start: usize, dim: usize, k: usize, mask: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for d in start..dim {
            rec(d + 1, dim, k - 1, mask | (1 << d), out);
        }
    }
    let mut out = Vec::new();
    rec(0, dim, k, 0, &mut out);
    out
}

fn check_side(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidInput(format!("side length must be at least 2, got {l}")));
    }
    Ok(())
}

/// Square tiling of the torus: L² vertices, 2L² edges, L² faces.
pub fn build_toric_2d(l: usize) -> Result<ChainComplex> {
    check_side(l)?;
    let lattice = CubicalLattice::new(vec![Axis::Periodic(l); 2], vec![]);
    Ok(lattice.into_complex(Meta::new("toric2d").with("L", l)))
}

/// Hypercubic tiling of the 4-torus; level i has C(4,i)·L⁴ cells.
pub fn build_toric_4d(l: usize) -> Result<ChainComplex> {
    check_side(l)?;
    let lattice = CubicalLattice::new(vec![Axis::Periodic(l); 4], vec![]);
    Ok(lattice.into_complex(Meta::new("toric4d").with("L", l)))
}

/// L×L×(L−1)×(L−1) box with every cell inside x∈{0,L} or y∈{0,L} removed.
pub fn build_tesseract(l: usize) -> Result<ChainComplex> {
    check_side(l)?;
    let axes = vec![Axis::Open(l), Axis::Open(l), Axis::Open(l - 1), Axis::Open(l - 1)];
    let lattice = CubicalLattice::new(axes, vec![(0, vec![0, l]), (1, vec![0, l])]);
    Ok(lattice.into_complex(Meta::new("tesseract").with("L", l)))
}
