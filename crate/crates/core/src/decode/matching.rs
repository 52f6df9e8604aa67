use mwmatching::{Matching, SENTINEL};

use crate::graph::NONE;
use crate::{Error, Result};

/// Who a marked node is matched with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Partner {
    Node(usize),
    Boundary,
}

/// Minimum-weight perfect pairing of `m` marked nodes.
///
/// `dist(i, j)` is the cost of pairing i with j (`NONE` if impossible);
/// `to_boundary(i)`, when given, the cost of sending i to the boundary.
/// Returns the partner of every marked node. Exact (blossom algorithm).
pub fn min_weight_pairing(
    m: usize,
    dist: impl Fn(usize, usize) -> u32,
    to_boundary: Option<&dyn Fn(usize) -> u32>,
) -> Result<Vec<Partner>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    if to_boundary.is_none() && m % 2 == 1 {
        return Err(Error::InvalidSyndrome(format!("{m} marked nodes cannot be paired")));
    }
    let mut costs = Vec::with_capacity(m * (m - 1) / 2 + m);
    let mut max_cost = 0u32;
    for i in 0..m {
        for j in i + 1..m {
            let d = dist(i, j);
            if d != NONE {
                max_cost = max_cost.max(d);
                costs.push((i, j, d));
            }
        }
        if let Some(b) = to_boundary {
            let d = b(i);
            if d != NONE {
                max_cost = max_cost.max(d);
                costs.push((i, m + i, d));
            }
        }
    }
    let big = max_cost as i64 + 1;
    if big * (2 * m) as i64 > i32::MAX as i64 {
        return Err(Error::InvalidInput("matching weights overflow".into()));
    }
    let mut edges: Vec<(usize, usize, i32)> = costs.into_iter().map(|(i, j, d)| (i, j, (big - d as i64) as i32)).collect();
    if to_boundary.is_some() {
        for i in 0..m {
            for j in i + 1..m {
                edges.push((m + i, m + j, big as i32));
            }
        }
    }
    let mate = Matching::new(edges).max_cardinality().solve();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let p = mate.get(i).copied().unwrap_or(SENTINEL);
        out.push(match p {
            SENTINEL => return Err(Error::InvalidSyndrome(format!("marked node {i} has no reachable partner"))),
            p if p < m => Partner::Node(p),
            _ => Partner::Boundary,
        });
    }
    Ok(out)
}
