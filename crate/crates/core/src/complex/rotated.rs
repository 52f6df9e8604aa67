use super::{CellCoord, ChainComplex, Meta};
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// Rotated toric layout: vertices at (x, y) with x+y even, faces at x+y odd,
/// edges running diagonally from (x, y) to (x+1, y±1), all mod L.
pub fn build_rotated_toric(l: usize) -> Result<ChainComplex> {
    if l < 2 || l % 2 == 1 {
        return Err(Error::InvalidInput(format!("rotated toric side must be even and at least 2, got {l}")));
    }
    let half = l * l / 2;
    // Both checkerboard classes list their sites row by row; x*L+y halved.
    let site = |x: usize, y: usize| ((x % l) * l + (y % l)) / 2;
    let vertex_coords: Vec<(usize, usize)> = (0..l).flat_map(|x| (0..l).map(move |y| (x, y))).filter(|(x, y)| (x + y) % 2 == 0).collect();
    let face_coords: Vec<(usize, usize)> = (0..l).flat_map(|x| (0..l).map(move |y| (x, y))).filter(|(x, y)| (x + y) % 2 == 1).collect();
    let edge = |x: usize, y: usize, dir: usize| 2 * site(x, y) + dir;

    let mut b1 = Vec::new();
    for (v, &(x, y)) in vertex_coords.iter().enumerate() {
        b1.push((v, 2 * v));
        b1.push((site(x + 1, y + 1), 2 * v));
        b1.push((v, 2 * v + 1));
        b1.push((site(x + 1, y + l - 1), 2 * v + 1));
    }
    let mut b2 = Vec::new();
    for (f, &(x, y)) in face_coords.iter().enumerate() {
        let (xm, ym, yp) = (x + l - 1, y + l - 1, y + 1);
        b2.push((edge(xm, y, 0), f));
        b2.push((edge(xm, y, 1), f));
        b2.push((edge(x, ym, 0), f));
        b2.push((edge(x, yp, 1), f));
    }
    let labels = vec![
        Some(vertex_coords.iter().map(|&(x, y)| CellCoord { coords: vec![x, y], dirs: vec![] }).collect()),
        Some(
            vertex_coords
                .iter()
                .flat_map(|&(x, y)| (0..2).map(move |d| CellCoord { coords: vec![x, y], dirs: vec![d] }))
                .collect(),
        ),
        Some(face_coords.iter().map(|&(x, y)| CellCoord { coords: vec![x, y], dirs: vec![0, 1] }).collect()),
    ];
    let complex = ChainComplex::new(
        vec![half, l * l, half],
        vec![BitMatrix::from_entries(half, l * l, b1), BitMatrix::from_entries(l * l, half, b2)],
        Meta::new("rotated").with("L", l),
    )?;
    Ok(complex.with_labels(labels))
}
