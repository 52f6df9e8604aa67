use super::{ChainComplex, Meta};
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// Cyclic order of a square face: corners c0..c3 with edge i joining c_i to c_{i+1}.
struct Square {
    corners: [usize; 4],
    edges: [usize; 4],
}

fn order_square(face: usize, edges: &[usize], ends: &[(usize, usize)]) -> Result<Square> {
    let bad = || Error::InvalidInput(format!("face {face} is not a square with four distinct sides"));
    if edges.len() != 4 {
        return Err(bad());
    }
    let e0 = edges[0];
    let (a, b) = ends[e0];
    let mut rest: Vec<usize> = edges[1..].to_vec();
    let mut order = vec![e0];
    let mut corners = vec![a, b];
    while order.len() < 4 {
        let cur = *corners.last().unwrap();
        let pos = rest.iter().position(|&e| ends[e].0 == cur || ends[e].1 == cur).ok_or_else(bad)?;
        let e = rest.remove(pos);
        let (u, v) = ends[e];
        corners.push(if u == cur { v } else { u });
        order.push(e);
    }
    if corners[4] != corners[0] {
        return Err(bad());
    }
    Ok(Square { corners: [corners[0], corners[1], corners[2], corners[3]], edges: [order[0], order[1], order[2], order[3]] })
}

/// Refines every square face into an l×l grid; edges grow by a factor l².
pub fn semi_hyperbolic(base: &ChainComplex, l: usize) -> Result<ChainComplex> {
    if base.dimension() != 2 {
        return Err(Error::InvalidInput("subdivision needs a 2-complex".into()));
    }
    if l == 0 {
        return Err(Error::InvalidInput("subdivision factor must be at least 1".into()));
    }
    let b1t = base.boundary(1).transpose();
    let b2t = base.boundary(2).transpose();
    let mut ends = Vec::with_capacity(b1t.rows());
    for e in 0..b1t.rows() {
        match b1t.row(e) {
            [u, v] => ends.push((*u, *v)),
            _ => return Err(Error::InvalidInput(format!("edge {e} does not have two distinct endpoints"))),
        }
    }
    let squares = (0..b2t.rows()).map(|f| order_square(f, b2t.row(f), &ends)).collect::<Result<Vec<_>>>()?;
    if l == 1 {
        return Ok(base.clone());
    }

    let (nv, ne, nf) = (base.size(0), base.size(1), base.size(2));
    let edge_vertex = |e: usize, t: usize| nv + e * (l - 1) + (t - 1);
    let face_vertex = |f: usize, a: usize, b: usize| nv + ne * (l - 1) + f * (l - 1) * (l - 1) + (b - 1) * (l - 1) + (a - 1);
    let interior_edges = 2 * l * (l - 1);
    let segment = |e: usize, t: usize| e * l + t;
    // Interior grid edges: horizontal rows b=1..l-1 first, then vertical columns a=1..l-1.
    let h_edge = |f: usize, a: usize, b: usize| ne * l + f * interior_edges + (b - 1) * l + a;
    let v_edge = |f: usize, a: usize, b: usize| ne * l + f * interior_edges + l * (l - 1) + (a - 1) * l + b;
    let total_v = nv + ne * (l - 1) + nf * (l - 1) * (l - 1);
    let total_e = ne * l + nf * interior_edges;
    let total_f = nf * l * l;

    let mut b1 = Vec::new();
    for e in 0..ne {
        let (u, v) = ends[e];
        for t in 0..l {
            let from = if t == 0 { u } else { edge_vertex(e, t) };
            let to = if t + 1 == l { v } else { edge_vertex(e, t + 1) };
            b1.push((from, segment(e, t)));
            b1.push((to, segment(e, t)));
        }
    }
    let mut b2 = Vec::new();
    for (f, sq) in squares.iter().enumerate() {
        // Position t along side i, measured from corner c_i, in the edge's own parametrisation.
        let along = |i: usize, t: usize| if ends[sq.edges[i]].0 == sq.corners[i] { t } else { l - t };
        let grid_vertex = |a: usize, b: usize| -> usize {
            match (a, b) {
                (0, 0) => sq.corners[0],
                (a, 0) if a == l => sq.corners[1],
                (a, b) if a == l && b == l => sq.corners[2],
                (0, b) if b == l => sq.corners[3],
                (a, 0) => edge_vertex(sq.edges[0], along(0, a)),
                (a, b) if a == l => edge_vertex(sq.edges[1], along(1, b)),
                (a, b) if b == l => edge_vertex(sq.edges[2], along(2, l - a)),
                (0, b) => edge_vertex(sq.edges[3], along(3, l - b)),
                (a, b) => face_vertex(f, a, b),
            }
        };
        let side_segment = |i: usize, t: usize| {
            let (s0, s1) = (along(i, t), along(i, t + 1));
            segment(sq.edges[i], s0.min(s1))
        };
        let horizontal = |a: usize, b: usize| match b {
            0 => side_segment(0, a),
            b if b == l => side_segment(2, l - 1 - a),
            b => h_edge(f, a, b),
        };
        let vertical = |a: usize, b: usize| match a {
            0 => side_segment(3, l - 1 - b),
            a if a == l => side_segment(1, b),
            a => v_edge(f, a, b),
        };
        for b in 1..l {
            for a in 0..l {
                b1.push((grid_vertex(a, b), h_edge(f, a, b)));
                b1.push((grid_vertex(a + 1, b), h_edge(f, a, b)));
            }
        }
        for a in 1..l {
            for b in 0..l {
                b1.push((grid_vertex(a, b), v_edge(f, a, b)));
                b1.push((grid_vertex(a, b + 1), v_edge(f, a, b)));
            }
        }
        for b in 0..l {
            for a in 0..l {
                let cell = f * l * l + b * l + a;
                for e in [horizontal(a, b), horizontal(a, b + 1), vertical(a, b), vertical(a + 1, b)] {
                    b2.push((e, cell));
                }
            }
        }
    }
    let mut meta = Meta { family: "semihyperbolic".into(), parameters: Default::default() };
    meta = meta.with("l", l).with("base", serde_json::to_value(&base.meta).expect("meta serializes"));
    ChainComplex::new(
        vec![total_v, total_e, total_f],
        vec![BitMatrix::from_entries(total_v, total_e, b1), BitMatrix::from_entries(total_e, total_f, b2)],
        meta,
    )
}
