//! Reflection groups G_{r,s}, coset enumeration and quotient surfaces.
//!
//! Elements of a finite quotient of G_{r,s} = ⟨a, b, c⟩ are the flags of a
//! closed tessellated surface. Faces, edges and vertices are the orbits of
//! ⟨a,b⟩, ⟨a,c⟩ and ⟨b,c⟩ respectively.

mod catalog;
mod enumerate;
mod words;

use std::collections::BTreeSet;

use crate::complex::{ChainComplex, Meta};
use crate::gf2::BitMatrix;
use crate::{Error, Result};

pub use catalog::{catalog, KnownQuotient};
pub use enumerate::{enumerate_quotient, CosetTable, Generator, GroupPresentation, Letter};
pub use words::{parse_relators, RelatorWord, Symbol};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const A: Letter = (0, false);
const B: Letter = (1, false);
const C: Letter = (2, false);

fn reflection_word(letters: &[usize]) -> Vec<Letter> {
    letters.iter().map(|&g| (g, false)).collect()
}

/// Enumerates G_{r,s} modulo the normal closure of `extra`.
pub fn enumerate_reflection_quotient(r: usize, s: usize, extra: &[RelatorWord], max_cosets: usize) -> Result<CosetTable> {
    let extra: Vec<Vec<Letter>> = extra.iter().map(|w| reflection_word(&w.reflection_letters())).collect();
    enumerate_quotient(&GroupPresentation::triangle(r, s), &extra, max_cosets)
}

/// Enumerates the rotation subgroup presentation ⟨ρ, σ⟩ modulo the normal closure of `extra`.
pub fn enumerate_rotation_quotient(r: usize, s: usize, extra: &[RelatorWord], max_cosets: usize) -> Result<CosetTable> {
    let extra = extra.iter().map(|w| w.rotation_letters()).collect::<Result<Vec<_>>>()?;
    enumerate_quotient(&GroupPresentation::rotation(r, s), &extra, max_cosets)
}

fn power(word: &[Letter], k: usize) -> Vec<Letter> {
    word.iter().copied().cycle().take(word.len() * k).collect()
}

/// True iff a, b, c, (ab)^i for 0<i<r and (bc)^j for 0<j<s all act nontrivially.
pub fn check_fixed_point_free(table: &CosetTable, r: usize, s: usize) -> bool {
    let moves = |w: &[Letter]| table.apply(0, w) != 0;
    // In a regular representation an element is trivial iff it fixes coset 0.
    moves(&[A]) && moves(&[B]) && moves(&[C]) && (1..r).all(|i| moves(&power(&[A, B], i))) && (1..s).all(|j| moves(&power(&[B, C], j)))
}

/// Orbits of the subgroup generated by `gens`, numbered by smallest member.
fn orbits(table: &CosetTable, gens: &[&[Letter]]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; table.order()];
    let mut count = 0;
    for start in 0..table.order() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        label[start] = count;
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = table.apply(x, g);
                if label[y] == usize::MAX {
                    label[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// The closed {r,s} surface whose flags are the elements of `table`.
pub fn build_surface_complex(table: &CosetTable, r: usize, s: usize) -> Result<ChainComplex> {
    if table.generator_count() != 3 {
        return Err(Error::InvalidInput("table is not over the reflections a, b, c".into()));
    }
    if !check_fixed_point_free(table, r, s) {
        return Err(Error::Precondition("the quotient has fixed points; cells would degenerate".into()));
    }
    let complex = complex_from_orbits(table, &[&[A], &[B]], &[&[A], &[C]], &[&[B], &[C]])?;
    Ok(with_meta(complex, r, s, table.order(), false))
}

const RHO: Letter = (0, false);
const SIGMA: Letter = (1, false);

/// True iff ρ^i for 0<i<r, σ^j for 0<j<s and ρσ all act nontrivially.
pub fn check_fixed_point_free_rotation(table: &CosetTable, r: usize, s: usize) -> bool {
    let moves = |w: &[Letter]| table.apply(0, w) != 0;
    moves(&[RHO, SIGMA]) && (1..r).all(|i| moves(&power(&[RHO], i))) && (1..s).all(|j| moves(&power(&[SIGMA], j)))
}

/// The closed orientable {r,s} surface whose orientation-preserving flags are
/// the elements of `table` (a quotient of ⟨ρ, σ⟩). Faces, edges and vertices
/// are the orbits of ⟨ρ⟩, ⟨ρσ⟩ and ⟨σ⟩.
pub fn build_orientable_surface_complex(table: &CosetTable, r: usize, s: usize) -> Result<ChainComplex> {
    if table.generator_count() != 2 {
        return Err(Error::InvalidInput("table is not over the rotations ρ, σ".into()));
    }
    if !check_fixed_point_free_rotation(table, r, s) {
        return Err(Error::Precondition("the quotient has fixed points; cells would degenerate".into()));
    }
    let complex = complex_from_orbits(table, &[&[RHO]], &[&[RHO, SIGMA]], &[&[SIGMA]])?;
    Ok(with_meta(complex, r, s, table.order(), true))
}

fn complex_from_orbits(table: &CosetTable, faces: &[&[Letter]], edges: &[&[Letter]], vertices: &[&[Letter]]) -> Result<ChainComplex> {
    let (face, nf) = orbits(table, faces);
    let (edge, ne) = orbits(table, edges);
    let (vertex, nv) = orbits(table, vertices);
    let b1: BTreeSet<(usize, usize)> = (0..table.order()).map(|g| (vertex[g], edge[g])).collect();
    let b2: BTreeSet<(usize, usize)> = (0..table.order()).map(|g| (edge[g], face[g])).collect();
    ChainComplex::new(
        vec![nv, ne, nf],
        vec![BitMatrix::from_entries(nv, ne, b1), BitMatrix::from_entries(ne, nf, b2)],
        Meta::default(),
    )
}

fn with_meta(mut complex: ChainComplex, r: usize, s: usize, order: usize, orientable: bool) -> ChainComplex {
    complex.meta = Meta::new("hyperbolic").with("r", r).with("s", s).with("quotient_order", order).with("orientable", orientable);
    complex
}

/// Enumerates and builds a quotient surface from relator text.
///
/// Words made only of rotations (`r R s S`) are closed under conjugation by
/// the rotation group, giving an orientable surface; words containing a bare
/// reflection are closed under the full reflection group.
pub fn surface_from_relators(r: usize, s: usize, relators: &str, max_cosets: usize) -> Result<ChainComplex> {
    let words = parse_relators(relators)?;
    let rotations_only = words.iter().all(|w| w.rotation_letters().is_ok());
    let mut complex = if rotations_only {
        let table = enumerate_rotation_quotient(r, s, &words, max_cosets)?;
        build_orientable_surface_complex(&table, r, s)?
    } else {
        let table = enumerate_reflection_quotient(r, s, &words, max_cosets)?;
        build_surface_complex(&table, r, s)?
    };
    complex.meta = complex.meta.clone().with("relators", relators);
    Ok(complex)
}

fn free_reduce(word: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.iter() {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *word = out;
}

/// Group G_L for the constant-distance {r,4} family, as a quotient of G_{4,r}.
///
/// The reflections g_1..g_r are conjugates of a = g_1 under the dihedral group
/// ⟨b, c⟩; opposite pairs satisfy (g_i g_{i+r/2})^L and all other pairs commute.
pub fn constant_distance_table(r: usize, l: usize, max_cosets: usize) -> Result<CosetTable> {
    if r < 6 || r % 2 == 1 {
        return Err(Error::InvalidInput(format!("r must be even and at least 6, got {r}")));
    }
    if l < 2 {
        return Err(Error::InvalidInput(format!("L must be at least 2, got {l}")));
    }
    let x_act = |i: usize| r - i + 1;
    let y_act = |i: usize| if i == 1 { 1 } else { r - i + 2 };
    // words[i] conjugates a into g_i: g_i = w a w⁻¹.
    let mut words: Vec<Option<Vec<Letter>>> = vec![None; r + 1];
    words[1] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([1usize]);
    while let Some(i) = queue.pop_front() {
        for (t, act) in [(B, &x_act as &dyn Fn(usize) -> usize), (C, &y_act)] {
            let j = act(i);
            if words[j].is_none() {
                let mut w = vec![t];
                w.extend(words[i].as_ref().unwrap());
                words[j] = Some(w);
                queue.push_back(j);
            }
        }
    }
    let g = |i: usize| -> Vec<Letter> {
        let w = words[i].as_ref().expect("dihedral action is transitive");
        let mut out = w.clone();
        out.push(A);
        out.extend(w.iter().rev());
        out
    };
    let mut extra = Vec::new();
    // Conjugation by b and c must permute the g_i as prescribed.
    for i in 1..=r {
        for (t, j) in [(B, x_act(i)), (C, y_act(i))] {
            let wi = words[i].as_ref().unwrap();
            let wj = words[j].as_ref().unwrap();
            let mut u: Vec<Letter> = wj.iter().rev().copied().collect();
            u.push(t);
            u.extend(wi);
            free_reduce(&mut u);
            if !u.is_empty() {
                let mut rel = u.clone();
                rel.push(A);
                rel.extend(u.iter().rev());
                rel.push(A);
                extra.push(rel);
            }
        }
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let mut pair = g(i);
            pair.extend(g(j));
            if j - i == r / 2 {
                extra.push(power(&pair, l));
            } else {
                extra.push(power(&pair, 2));
            }
        }
    }
    enumerate_quotient(&GroupPresentation::triangle(4, r), &extra, max_cosets)
}

/// The {r,4} surface of the constant-distance family with |E| = (r/2)(2L)^{r/2}.
pub fn build_constant_distance_surface(r: usize, l: usize, max_cosets: usize) -> Result<ChainComplex> {
    let table = constant_distance_table(r, l, max_cosets)?;
    // The enumeration labels squares as faces; the family's r-gons are its dual cells.
    let mut complex = build_surface_complex(&table, 4, r)?.dual();
    complex.meta = Meta::new("constant-distance").with("r", r).with("L", l).with("quotient_order", table.order());
    Ok(complex)
}
