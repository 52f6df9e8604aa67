//! Graphs whose vertices are checks and whose edges are qubits.
//!
//! Valid when every qubit touches at most two checks of the relevant type,
//! as in 2D surface codes and in the edge-to-vertex structure of 4D codes.
//! A qubit with a single check becomes an edge to the virtual boundary node.

use std::collections::VecDeque;

use crate::gf2::BitMatrix;
use crate::{Error, Result};

pub const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct CheckGraph {
    nodes: usize,
    has_boundary: bool,
    /// Per node: (neighbour, edge) sorted by edge id.
    adj: Vec<Vec<(u32, u32)>>,
    ends: Vec<(u32, u32)>,
}

impl CheckGraph {
    /// Rows of `checks` become nodes, columns become edges.
    pub fn from_checks(checks: &BitMatrix) -> Result<Self> {
        let nodes = checks.rows();
        let t = checks.transpose();
        let boundary = nodes as u32;
        let mut ends = Vec::with_capacity(t.rows());
        let mut has_boundary = false;
        for e in 0..t.rows() {
            match t.row(e) {
                [u, v] => ends.push((*u as u32, *v as u32)),
                [u] => {
                    has_boundary = true;
                    ends.push((*u as u32, boundary));
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "qubit {e} touches {} checks; matching needs one or two",
                        other.len()
                    )))
                }
            }
        }
        let mut adj = vec![Vec::new(); nodes + has_boundary as usize];
        for (e, &(u, v)) in ends.iter().enumerate() {
            adj[u as usize].push((v, e as u32));
            adj[v as usize].push((u, e as u32));
        }
        Ok(Self { nodes, has_boundary, adj, ends })
    }

    /// Check nodes, excluding the boundary.
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// Check nodes plus the boundary node if present.
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn boundary(&self) -> Option<usize> {
        self.has_boundary.then_some(self.nodes)
    }

    pub fn edges(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.ends[e];
        (u as usize, v as usize)
    }

    pub fn neighbours(&self, u: usize) -> &[(u32, u32)] {
        &self.adj[u]
    }

    /// Breadth-first tree from `source`: distances and the edge used to reach each node.
    /// Neighbours are scanned in ascending edge order; the first discovery wins.
    pub fn bfs(&self, source: usize) -> (Vec<u32>, Vec<u32>) {
        let mut dist = vec![NONE; self.node_count()];
        let mut parent = vec![NONE; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source as u32);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &self.adj[u as usize] {
                if dist[w as usize] == NONE {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = e;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    pub fn other_end(&self, e: usize, u: usize) -> usize {
        let (a, b) = self.ends(e);
        if a == u {
            b
        } else {
            a
        }
    }
}

/// All-pairs shortest paths with path reconstruction.
#[derive(Clone, Debug)]
pub struct ShortestPaths {
    n: usize,
    dist: Vec<u32>,
    parent: Vec<u32>,
}

impl ShortestPaths {
    pub fn new(graph: &CheckGraph) -> Self {
        let n = graph.node_count();
        let mut dist = Vec::with_capacity(n * n);
        let mut parent = Vec::with_capacity(n * n);
        for s in 0..n {
            let (d, p) = graph.bfs(s);
            dist.extend(d);
            parent.extend(p);
        }
        Self { n, dist, parent }
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Edges on the stored shortest path between `u` and `v`.
    pub fn path(&self, graph: &CheckGraph, u: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = v;
        while cur != u {
            let e = self.parent[u * self.n + cur];
            assert_ne!(e, NONE, "nodes {u} and {v} are disconnected");
            out.push(e as usize);
            cur = graph.other_end(e as usize, cur);
        }
        out
    }
}
