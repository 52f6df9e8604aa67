//! Exact minimum-weight logicals.
//!
//! For 2D codes: a logical of type t is a closed loop in the check graph of
//! the opposite checks that crosses some opposite logical an odd number of
//! times. Doubling the graph, with edges in that logical's support switching
//! copies, turns this into a shortest v → v′ path.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::code::{CssCode, LogicalBasis, Pauli};
use crate::gf2::BitVector;
use crate::graph::{CheckGraph, NONE};
use crate::{Error, Result};

/// Cap on distinct minimum-weight operators stored while counting.
pub const COUNT_CAP: usize = 1_000_000;

/// The doubled graph for one crossing pattern.
pub struct DoubledGraph<'a> {
    graph: &'a CheckGraph,
    cross: &'a BitVector,
}

impl<'a> DoubledGraph<'a> {
    pub fn new(graph: &'a CheckGraph, cross: &'a BitVector) -> Self {
        Self { graph, cross }
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.graph.edges()
    }

    /// Neighbours of doubled node `2u + layer`, with the original edge id.
    fn neighbours(&self, node: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (u, layer) = (node / 2, node % 2);
        self.graph.neighbours(u).iter().map(move |&(w, e)| {
            let flip = self.cross.get(e as usize) as usize;
            (2 * w as usize + (layer ^ flip), e as usize)
        })
    }

    /// BFS distances from `2v`, stopping once `2v+1` is settled or depth exceeds `limit`.
    fn distances(&self, v: usize, limit: u32, dist: &mut [u32]) -> Option<u32> {
        dist.iter_mut().for_each(|d| *d = NONE);
        let (start, goal) = (2 * v, 2 * v + 1);
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x];
            if dx >= limit {
                break;
            }
            for (y, _) in self.neighbours(x) {
                if dist[y] == NONE {
                    dist[y] = dx + 1;
                    if y == goal {
                        return Some(dx + 1);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Every shortest `2v → 2v+1` path, as original edge lists. Requires a
    /// full BFS table from `2v`.
    fn shortest_paths(&self, v: usize, dist: &[u32], mut visit: impl FnMut(&[usize]) -> bool) {
        let goal = 2 * v + 1;
        let mut path = Vec::with_capacity(dist[goal] as usize);
        fn walk(g: &DoubledGraph, node: usize, dist: &[u32], path: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if dist[node] == 0 {
                return visit(path);
            }
            for (prev, e) in g.neighbours(node) {
                if dist[prev] != NONE && dist[prev] + 1 == dist[node] {
                    path.push(e);
                    let go_on = walk(g, prev, dist, path, visit);
                    path.pop();
                    if !go_on {
                        return false;
                    }
                }
            }
            true
        }
        walk(self, goal, dist, &mut path, &mut visit);
    }

    fn full_bfs(&self, v: usize, dist: &mut [u32]) {
        dist.iter_mut().for_each(|d| *d = NONE);
        dist[2 * v] = 0;
        let mut queue = VecDeque::from([2 * v]);
        while let Some(x) = queue.pop_front() {
            for (y, _) in self.neighbours(x) {
                if dist[y] == NONE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
}

fn graph_for(code: &CssCode, side: Pauli) -> Result<CheckGraph> {
    if code.complex().dimension() != 2 || code.qubit_level() != 1 {
        return Err(Error::InvalidInput("graph distance needs a 2D code with qubits on edges".into()));
    }
    let g = CheckGraph::from_checks(code.checks_for(side))?;
    if g.boundary().is_some() {
        return Err(Error::InvalidInput("graph distance needs a closed surface".into()));
    }
    Ok(g)
}

/// One endpoint per support edge, deduplicated, ascending.
fn sources(graph: &CheckGraph, cross: &BitVector) -> Vec<usize> {
    let mut seen = vec![false; graph.node_count()];
    let mut out = Vec::new();
    for e in cross.ones() {
        let (u, w) = graph.ends(e);
        if !seen[u] && !seen[w] {
            seen[u] = true;
            out.push(u);
        }
    }
    out.sort_unstable();
    out
}

fn loop_of(edges: &[usize], n: usize) -> BitVector {
    BitVector::from_indices(n, edges.iter().copied())
}

/// Minimum weight of a logical of type `side`, with a witness loop.
pub fn distance(code: &CssCode, logicals: &LogicalBasis, side: Pauli) -> Result<(usize, BitVector)> {
    if logicals.k() == 0 {
        return Err(Error::TrivialCode);
    }
    let graph = graph_for(code, side)?;
    let crosses = logicals.of(side.other());
    let best = crosses
        .par_iter()
        .enumerate()
        .filter_map(|(i, cross)| {
            let dg = DoubledGraph::new(&graph, cross);
            let mut dist = vec![NONE; dg.vertex_count()];
            let mut best: Option<(u32, usize)> = None;
            for v in sources(&graph, cross) {
                let limit = best.map_or(u32::MAX, |(d, _)| d - 1);
                if let Some(d) = dg.distances(v, limit, &mut dist) {
                    if best.is_none_or(|(b, _)| d < b) {
                        best = Some((d, v));
                    }
                }
            }
            best.map(|(d, v)| (d, i, v))
        })
        .min()
        .ok_or_else(|| Error::Precondition("no logical loop found".into()))?;
    let (d, i, v) = best;
    let dg = DoubledGraph::new(&graph, &crosses[i]);
    let mut dist = vec![NONE; dg.vertex_count()];
    dg.full_bfs(v, &mut dist);
    let mut witness = None;
    dg.shortest_paths(v, &dist, |path| {
        witness = Some(loop_of(path, code.n()));
        false
    });
    let witness = witness.expect("a shortest path exists");
    debug_assert_eq!(witness.weight(), d as usize);
    Ok((d as usize, witness))
}

pub fn z_distance(code: &CssCode, logicals: &LogicalBasis) -> Result<(usize, BitVector)> {
    distance(code, logicals, Pauli::Z)
}

pub fn x_distance(code: &CssCode, logicals: &LogicalBasis) -> Result<(usize, BitVector)> {
    distance(code, logicals, Pauli::X)
}

/// Distance and number of distinct minimum-weight logicals of type `side`.
pub fn count_min_weight_logicals(code: &CssCode, logicals: &LogicalBasis, side: Pauli) -> Result<(usize, usize)> {
    count_with_cap(code, logicals, side, COUNT_CAP)
}

pub fn count_with_cap(code: &CssCode, logicals: &LogicalBasis, side: Pauli, cap: usize) -> Result<(usize, usize)> {
    let (d, _) = distance(code, logicals, side)?;
    let graph = graph_for(code, side)?;
    let per_logical: Vec<HashSet<Vec<u32>>> = logicals
        .of(side.other())
        .par_iter()
        .map(|cross| {
            let dg = DoubledGraph::new(&graph, cross);
            let mut dist = vec![NONE; dg.vertex_count()];
            let mut found = HashSet::new();
            for v in sources(&graph, cross) {
                if dg.distances(v, d as u32, &mut dist) != Some(d as u32) {
                    continue;
                }
                dg.full_bfs(v, &mut dist);
                dg.shortest_paths(v, &dist, |path| {
                    let mut edges: Vec<u32> = path.iter().map(|&e| e as u32).collect();
                    edges.sort_unstable();
                    if edges.windows(2).all(|w| w[0] != w[1]) {
                        found.insert(edges);
                    }
                    found.len() <= cap
                });
                if found.len() > cap {
                    break;
                }
            }
            found
        })
        .collect();
    let mut all: HashSet<Vec<u32>> = HashSet::new();
    for set in per_logical {
        all.extend(set);
        if all.len() > cap {
            return Err(Error::EnumerationCap { cap, partial: all.len() });
        }
    }
    Ok((d, all.len()))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Largest number of supports the exhaustive search will visit.
pub const BRUTE_FORCE_GUARD: f64 = 1e8;

/// Smallest weight ≤ `w_max` of a logical of type `side`, by exhaustive search.
pub fn brute_force_distance(code: &CssCode, side: Pauli, w_max: usize) -> Result<Option<usize>> {
    let n = code.n();
    let total: f64 = (1..=w_max.min(n)).map(|w| binomial(n, w)).sum();
    if total > BRUTE_FORCE_GUARD {
        return Err(Error::InvalidInput(format!("{total:.3e} supports exceed the brute-force guard")));
    }
    let checks = code.checks_for(side).transpose();
    let columns: Vec<BitVector> = (0..n).map(|q| BitVector::from_indices(checks.cols(), checks.row(q).iter().copied())).collect();
    for w in 1..=w_max.min(n) {
        let mut chosen = Vec::with_capacity(w);
        let mut syndromes = vec![BitVector::zeros(checks.cols()); w + 1];
        if search(code, side, &columns, 0, w, &mut chosen, &mut syndromes)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search(
    code: &CssCode,
    side: Pauli,
    columns: &[BitVector],
    start: usize,
    w: usize,
    chosen: &mut Vec<usize>,
    syndromes: &mut [BitVector],
) -> Result<bool> {
    let depth = chosen.len();
    if depth == w {
        if !syndromes[depth].is_zero() {
            return Ok(false);
        }
        let support = BitVector::from_indices(code.n(), chosen.iter().copied());
        return code.is_logical_failure(&support, side);
    }
    for q in start..=columns.len() - (w - depth) {
        let next = syndromes[depth].xor(&columns[q]);
        syndromes[depth + 1] = next;
        chosen.push(q);
        let hit = search(code, side, columns, q + 1, w, chosen, syndromes)?;
        chosen.pop();
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}
