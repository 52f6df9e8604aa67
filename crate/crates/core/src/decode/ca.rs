use rand::RngCore;
use serde::{Deserialize, Serialize};

use super::{Classification, DecodeOutcome};
use crate::code::{CssCode, Pauli};
use crate::complex::{Axis, CubicalLattice};
use crate::gf2::BitVector;
use crate::{Error, Result};

/// Local update rule of a cellular-automaton decoder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaRule {
    Toom,
    Dklp,
}

impl std::str::FromStr for CaRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "toom" => Ok(CaRule::Toom),
            "dklp" => Ok(CaRule::Dklp),
            _ => Err(Error::Parse(format!("unknown rule {s:?}"))),
        }
    }
}

/// Coordinate planes in sweep order: xy, xz, xw, yz, yw, zw.
pub const PLANES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Face/edge geometry of the periodic L⁴ lattice, indexed like
/// [`crate::complex::build_toric_4d`].
#[derive(Clone, Debug)]
pub struct Ca4Lattice {
    l: usize,
    edge_dir: Vec<u8>,
    /// Per face: [S, W, N, E]; N and E meet at the corner with the largest coordinates.
    face_edges: Vec<[u32; 4]>,
    face_plane: Vec<u8>,
    face_class: Vec<u8>,
    /// Per edge and plane: the faces of that plane containing the edge
    /// as [S or W, N or E], or `u32::MAX` if the plane misses its direction.
    edge_faces: Vec<[[u32; 2]; 6]>,
    /// Per plane: faces split into classes with no shared edge inside a class.
    classes: Vec<Vec<Vec<u32>>>,
}

impl Ca4Lattice {
    pub fn new(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidInput(format!("side length must be at least 2, got {l}")));
        }
        let lattice = CubicalLattice::new(vec![Axis::Periodic(l); 4], vec![]);
        let (faces, edges) = (lattice.count(2), lattice.count(1));
        let edge_dir = (0..edges).map(|e| lattice.coord(1, e).dirs[0] as u8).collect();
        let mut face_edges = vec![[0u32; 4]; faces];
        let mut face_plane = vec![0u8; faces];
        let mut face_class = vec![0u8; faces];
        let mut edge_faces = vec![[[u32::MAX; 2]; 6]; edges];
        let colours = if l.is_multiple_of(2) { 2 } else { 3 };
        let mut classes = vec![vec![Vec::new(); colours]; PLANES.len()];
        let edge = |x: &[usize], d: usize| lattice.cell_id(x, &[d]).expect("periodic edge") as u32;
        for f in 0..faces {
            let c = lattice.coord(2, f);
            let (i, j) = (c.dirs[0], c.dirs[1]);
            let v = &c.coords;
            let mut vi = v.clone();
            vi[i] += 1;
            let mut vj = v.clone();
            vj[j] += 1;
            let fe = [edge(v, i), edge(v, j), edge(&vj, i), edge(&vi, j)];
            face_edges[f] = fe;
            let plane = PLANES.iter().position(|&p| p == (i, j)).expect("face spans a coordinate plane");
            face_plane[f] = plane as u8;
            for (slot, &e) in fe.iter().enumerate() {
                edge_faces[e as usize][plane][slot / 2] = f as u32;
            }
            let class = colour(l, v[i], v[j]);
            face_class[f] = class as u8;
            classes[plane][class].push(f as u32);
        }
        Ok(Self { l, edge_dir, face_edges, face_plane, face_class, edge_faces, classes })
    }

    pub fn side(&self) -> usize {
        self.l
    }

    pub fn faces(&self) -> usize {
        self.face_edges.len()
    }

    pub fn edges(&self) -> usize {
        self.edge_dir.len()
    }

    /// Edges of face `f` as [S, W, N, E].
    pub fn face_edges(&self, f: usize) -> [u32; 4] {
        self.face_edges[f]
    }

    /// Plane group of face `f`, an index into [`PLANES`].
    pub fn face_plane(&self, f: usize) -> usize {
        self.face_plane[f] as usize
    }

    /// Faces of plane group `plane`, one vector per checkerboard class.
    pub fn plane_classes(&self, plane: usize) -> &[Vec<u32>] {
        &self.classes[plane]
    }
}

fn colour(l: usize, a: usize, b: usize) -> usize {
    if l.is_multiple_of(2) {
        (a + b) % 2
    } else {
        let f = |x: usize| if x == l - 1 { 2 } else { x % 2 };
        (f(a) + f(b)) % 3
    }
}

const ABSENT: u32 = u32::MAX;

/// Face errors and edge syndrome on a [`Ca4Lattice`], with an optional
/// measurement-flip mask on top of the true syndrome.
#[derive(Clone, Debug)]
pub struct CaGrid4D<'a> {
    lattice: &'a Ca4Lattice,
    error: Vec<bool>,
    syndrome: Vec<bool>,
    weight: usize,
    mask: Option<Vec<bool>>,
    /// Edges whose measured bit is set, with positions for O(1) removal.
    seen: Vec<u32>,
    seen_pos: Vec<u32>,
}

impl<'a> CaGrid4D<'a> {
    pub fn new(lattice: &'a Ca4Lattice) -> Self {
        Self {
            lattice,
            error: vec![false; lattice.faces()],
            syndrome: vec![false; lattice.edges()],
            weight: 0,
            mask: None,
            seen: Vec::new(),
            seen_pos: vec![ABSENT; lattice.edges()],
        }
    }

    pub fn from_error(lattice: &'a Ca4Lattice, error: &BitVector) -> Result<Self> {
        if error.len() != lattice.faces() {
            return Err(Error::DimensionMismatch { expected: lattice.faces(), found: error.len() });
        }
        let mut grid = Self::new(lattice);
        for f in error.ones() {
            grid.flip(f);
        }
        Ok(grid)
    }

    pub fn lattice(&self) -> &'a Ca4Lattice {
        self.lattice
    }

    fn toggle_seen(&mut self, e: usize) {
        match self.seen_pos[e] {
            ABSENT => {
                self.seen_pos[e] = self.seen.len() as u32;
                self.seen.push(e as u32);
            }
            pos => {
                let last = self.seen.pop().expect("listed edge");
                if last as usize != e {
                    self.seen[pos as usize] = last;
                    self.seen_pos[last as usize] = pos;
                }
                self.seen_pos[e] = ABSENT;
            }
        }
    }

    /// Flips face `f` and its four edge checks.
    pub fn flip(&mut self, f: usize) {
        self.error[f] ^= true;
        for e in self.lattice.face_edges[f] {
            let e = e as usize;
            self.syndrome[e] ^= true;
            if self.syndrome[e] {
                self.weight += 1;
            } else {
                self.weight -= 1;
            }
            self.toggle_seen(e);
        }
    }

    pub fn error(&self) -> BitVector {
        BitVector::from_bools(&self.error)
    }

    pub fn has_error(&self, f: usize) -> bool {
        self.error[f]
    }

    /// True syndrome H_X · error.
    pub fn syndrome(&self) -> BitVector {
        BitVector::from_bools(&self.syndrome)
    }

    pub fn syndrome_weight(&self) -> usize {
        self.weight
    }

    /// Sets or clears the measurement-flip mask.
    pub fn set_mask(&mut self, mask: Option<Vec<bool>>) -> Result<()> {
        if let Some(m) = &mask {
            if m.len() != self.lattice.edges() {
                return Err(Error::DimensionMismatch { expected: self.lattice.edges(), found: m.len() });
            }
        }
        for e in self.mask.iter().flat_map(|m| m.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e)).collect::<Vec<_>>() {
            self.toggle_seen(e);
        }
        for e in mask.iter().flat_map(|m| m.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e)) {
            self.toggle_seen(e);
        }
        self.mask = mask;
        Ok(())
    }

    /// Syndrome bit as seen by the decoder.
    pub fn measured(&self, e: usize) -> bool {
        self.seen_pos[e] != ABSENT
    }

    /// Edges whose measured bit is set, in no particular order.
    pub fn measured_edges(&self) -> &[u32] {
        &self.seen
    }

    fn violated_count(&self, f: u32) -> usize {
        self.lattice.face_edges[f as usize].iter().filter(|&&e| self.measured(e as usize)).count()
    }
}

/// One Toom sweep: in each plane group, every face whose N and E checks are
/// violated is flipped. The syndrome is re-read between plane groups.
pub fn toom_sweep(grid: &mut CaGrid4D<'_>) {
    toom_sweep_with(grid, true);
}

/// Toom sweep; with `recompute = false` all six groups decide from the
/// syndrome seen at the start of the sweep.
pub fn toom_sweep_with(grid: &mut CaGrid4D<'_>, recompute: bool) {
    let lattice = grid.lattice;
    let snapshot: Option<Vec<bool>> = (!recompute).then(|| (0..lattice.edges()).map(|e| grid.measured(e)).collect());
    let mut snapshot_list: Vec<u32> = if recompute { Vec::new() } else { grid.seen.clone() };
    snapshot_list.sort_unstable();
    let mut flips = Vec::new();
    for (plane, &(i, _)) in PLANES.iter().enumerate() {
        flips.clear();
        let edges = if recompute { &grid.seen } else { &snapshot_list };
        for &n in edges {
            if lattice.edge_dir[n as usize] as usize != i {
                continue;
            }
            let f = lattice.edge_faces[n as usize][plane][1];
            let e = lattice.face_edges[f as usize][3] as usize;
            let hit = match &snapshot {
                Some(s) => s[e],
                None => grid.measured(e),
            };
            if hit {
                flips.push(f);
            }
        }
        for &f in &flips {
            grid.flip(f as usize);
        }
    }
}

/// One DKLP sweep: per plane group and class, flip faces with more than two
/// violated checks, and faces with exactly two on a fair coin.
pub fn dklp_sweep<R: RngCore + ?Sized>(grid: &mut CaGrid4D<'_>, rng: &mut R) {
    let lattice = grid.lattice;
    let mut candidates = Vec::new();
    let mut flips = Vec::new();
    for (plane, &(i, j)) in PLANES.iter().enumerate() {
        for class in 0..lattice.classes[plane].len() {
            candidates.clear();
            for &e in &grid.seen {
                let d = lattice.edge_dir[e as usize] as usize;
                if d != i && d != j {
                    continue;
                }
                for f in lattice.edge_faces[e as usize][plane] {
                    if lattice.face_class[f as usize] as usize == class {
                        candidates.push(f);
                    }
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            flips.clear();
            for &f in &candidates {
                let count = grid.violated_count(f);
                if count > 2 || (count == 2 && rng.next_u32() >> 31 == 1) {
                    flips.push(f);
                }
            }
            for &f in &flips {
                grid.flip(f as usize);
            }
        }
    }
}

pub fn sweep<R: RngCore + ?Sized>(grid: &mut CaGrid4D<'_>, rule: CaRule, rng: &mut R) {
    match rule {
        CaRule::Toom => toom_sweep(grid),
        CaRule::Dklp => dklp_sweep(grid, rng),
    }
}

/// Runs `rule` with perfect syndrome on a copy of `grid` until the syndrome
/// vanishes or `v_max` consecutive sweeps fail to lower its weight.
pub fn verify_correctable<R: RngCore + ?Sized>(
    code: &CssCode,
    grid: &CaGrid4D<'_>,
    rule: CaRule,
    v_max: usize,
    rng: &mut R,
) -> Result<DecodeOutcome> {
    if v_max == 0 {
        return Err(Error::InvalidInput("v_max must be at least 1".into()));
    }
    if code.n() != grid.lattice.faces() {
        return Err(Error::DimensionMismatch { expected: grid.lattice.faces(), found: code.n() });
    }
    let start = grid.error();
    let mut work = grid.clone();
    work.set_mask(None)?;
    let mut best = work.weight;
    let mut idle = 0;
    let mut sweeps = 0;
    while work.weight > 0 {
        if idle >= v_max {
            let correction = work.error().xor(&start);
            return Ok(DecodeOutcome { class: Classification::StuckFailure, correction, sweeps });
        }
        sweep(&mut work, rule, rng);
        sweeps += 1;
        if work.weight < best {
            best = work.weight;
            idle = 0;
        } else {
            idle += 1;
        }
    }
    let residual = work.error();
    let failed = !residual.is_zero() && code.logical_basis()?.anticommutes(&residual, Pauli::Z);
    let class = if failed { Classification::LogicalFailure } else { Classification::Success };
    Ok(DecodeOutcome { class, correction: residual.xor(&start), sweeps })
}
