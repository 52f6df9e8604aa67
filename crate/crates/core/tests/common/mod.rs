//! Shared helpers and independent reference implementations for the test suites.
#![allow(dead_code)]

use homcode::code::CssCode;
use homcode::coxeter::{surface_from_relators, KnownQuotient, DEFAULT_MAX_COSETS};
use homcode::complex::ChainComplex;
use homcode::gf2::BitMatrix;
use petgraph::graph::UnGraph;

/// Catalogued {r,s} surface code with n edges.
pub fn hyperbolic(r: usize, s: usize, n: usize) -> CssCode {
    let q = KnownQuotient::find(r, s, n).expect("catalogued quotient");
    let surface = surface_from_relators(r, s, q.relators, DEFAULT_MAX_COSETS).expect("surface");
    CssCode::from_complex(&surface, 1).expect("code")
}

pub fn dense(m: &BitMatrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect()).collect()
}

/// Textbook Gaussian elimination on a dense 0/1 matrix.
pub fn dense_rank(mut a: Vec<Vec<u8>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] == 1) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] == 1 {
                for k in 0..cols {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn dense_mul(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).fold(0, |acc, k| acc ^ (row[k] & b[k][j]))).collect()).collect()
}

/// Minimum total cost of pairing marks, optionally sending marks to a boundary,
/// by exhaustive recursion.
pub fn brute_force_pairing(m: usize, dist: &dyn Fn(usize, usize) -> u32, to_boundary: Option<&dyn Fn(usize) -> u32>) -> Option<u64> {
    fn go(left: &mut Vec<usize>, dist: &dyn Fn(usize, usize) -> u32, tb: Option<&dyn Fn(usize) -> u32>) -> Option<u64> {
        let Some(&first) = left.first() else { return Some(0) };
        let rest: Vec<usize> = left[1..].to_vec();
        let mut best: Option<u64> = None;
        if let Some(b) = tb {
            let c = b(first);
            if c != u32::MAX {
                let mut next = rest.clone();
                if let Some(sub) = go(&mut next, dist, tb) {
                    best = Some(best.map_or(c as u64 + sub, |x: u64| x.min(c as u64 + sub)));
                }
            }
        }
        for i in 0..rest.len() {
            let c = dist(first, rest[i]);
            if c == u32::MAX {
                continue;
            }
            let mut next: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            if let Some(sub) = go(&mut next, dist, tb) {
                best = Some(best.map_or(c as u64 + sub, |x: u64| x.min(c as u64 + sub)));
            }
        }
        best
    }
    go(&mut (0..m).collect(), dist, to_boundary)
}

/// Hasse diagram with cells weighted by level.
pub fn hasse(c: &ChainComplex) -> UnGraph<usize, ()> {
    let mut g = UnGraph::new_undirected();
    let mut ids = Vec::new();
    for level in 0..=c.dimension() {
        ids.push((0..c.size(level)).map(|_| g.add_node(level)).collect::<Vec<_>>());
    }
    for i in 1..=c.dimension() {
        for (lo, hi) in c.boundary(i).entries() {
            g.add_edge(ids[i - 1][lo], ids[i][hi], ());
        }
    }
    g
}

pub fn isomorphic(a: &ChainComplex, b: &ChainComplex) -> bool {
    a.sizes() == b.sizes() && petgraph::algo::is_isomorphic_matching(&hasse(a), &hasse(b), |x, y| x == y, |_, _| true)
}
