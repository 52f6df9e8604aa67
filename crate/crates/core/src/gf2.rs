//! Linear algebra over GF(2).
//!
//! [`BitVector`] is a packed bit string, [`BitMatrix`] a sparse 0/1 matrix.
//! Elimination densifies into packed rows and follows a fixed pivot rule
//! (leftmost column, lowest row) so every derived basis is reproducible.

use std::fmt;

use crate::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    /// Vector with ones at `indices`. Repeated indices cancel.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the overlap, i.e. the GF(2) inner product.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones & 1 == 1
    }

    /// Indices of set bits in ascending order.
    pub fn ones(&self) -> Ones<'_> {
        Ones { words: &self.words, word_index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.ones().collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[{}](", self.len)?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * WORD + bit);
            }
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
    }
}

/// Sparse matrix over GF(2); each row keeps its sorted column indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    row_entries: Vec<Vec<usize>>,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} {:?}", self.rows, self.cols, self.row_entries)
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, row_entries: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, row_entries: (0..n).map(|i| vec![i]).collect() }
    }

    /// Builds from (row, col) positions. A position listed twice cancels.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut row_entries = vec![Vec::new(); rows];
        for (r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            row_entries[r].push(c);
        }
        for row in &mut row_entries {
            normalize_mod2(row);
        }
        Self { rows, cols, row_entries }
    }

    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Self {
        let row_entries = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                r.to_indices()
            })
            .collect::<Vec<_>>();
        Self { rows: row_entries.len(), cols, row_entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Sorted column indices of row `r`.
    pub fn row(&self, r: usize) -> &[usize] {
        &self.row_entries[r]
    }

    pub fn row_vector(&self, r: usize) -> BitVector {
        BitVector::from_indices(self.cols, self.row_entries[r].iter().copied())
    }

    pub fn row_vectors(&self) -> Vec<BitVector> {
        (0..self.rows).map(|r| self.row_vector(r)).collect()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_entries[r].binary_search(&c).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.row_entries.iter().map(Vec::len).sum()
    }

    /// All (row, col) positions in ascending order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_entries.iter().enumerate().flat_map(|(r, cs)| cs.iter().map(move |&c| (r, c)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut row_entries = vec![Vec::new(); self.cols];
        for (r, c) in self.entries() {
            row_entries[c].push(r);
        }
        BitMatrix { rows: self.cols, cols: self.rows, row_entries }
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut out = BitVector::zeros(self.rows);
        for (r, cs) in self.row_entries.iter().enumerate() {
            if cs.iter().filter(|&&c| v.get(c)).count() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut acc = BitVector::zeros(rhs.cols);
        let row_entries = self
            .row_entries
            .iter()
            .map(|cs| {
                acc.clear();
                for &k in cs {
                    for &c in rhs.row(k) {
                        acc.flip(c);
                    }
                }
                acc.to_indices()
            })
            .collect();
        BitMatrix { rows: self.rows, cols: rhs.cols, row_entries }
    }

    pub fn is_zero(&self) -> bool {
        self.row_entries.iter().all(Vec::is_empty)
    }

    /// Relabels rows and columns: entry (r, c) moves to (row_perm[r], col_perm[c]).
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> BitMatrix {
        BitMatrix::from_entries(self.rows, self.cols, self.entries().map(|(r, c)| (row_perm[r], col_perm[c])))
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for (_, c) in self.entries() {
            w[c] += 1;
        }
        w
    }
}

fn normalize_mod2(row: &mut Vec<usize>) {
    row.sort_unstable();
    let mut out = Vec::with_capacity(row.len());
    let mut i = 0;
    while i < row.len() {
        let mut j = i;
        while j < row.len() && row[j] == row[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(row[i]);
        }
        i = j;
    }
    *row = out;
}

/// Reduced row echelon form of a list of packed rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    /// Nonzero reduced rows, ordered by pivot column.
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Eliminates in place: pivot on the leftmost column that still has a
    /// nonzero entry, choosing the lowest-index row holding it.
    pub fn new(cols: usize, mut rows: Vec<BitVector>) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        let mut col = 0;
        while col < cols && rank < rows.len() {
            let word = col / WORD;
            let mask = 1u64 << (col % WORD);
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].words[word] & mask != 0) else {
                col += 1;
                continue;
            };
            rows.swap(rank, found);
            let (head, tail) = rows.split_at_mut(rank);
            let (pivot, rest) = tail.split_first_mut().expect("pivot row exists");
            for other in head.iter_mut().chain(rest.iter_mut()) {
                if other.words[word] & mask != 0 {
                    for (a, b) in other.words[word..].iter_mut().zip(&pivot.words[word..]) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            col += 1;
        }
        rows.truncate(rank);
        Self { cols, rows, pivots }
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        Self::new(m.cols(), m.row_vectors())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Remainder of `v` after clearing every pivot column; zero iff `v` is in the row space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Null-space basis, one vector per free column in ascending order.
    pub fn kernel(&self) -> Vec<BitVector> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::zeros(self.cols);
                v.set(f, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    Echelon::from_matrix(m).rank()
}

/// Basis of {x : m·x = 0}, in reduced echelon order.
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVector> {
    Echelon::from_matrix(m).kernel()
}

/// Some x with m·x = b, or `None` if b is outside the column space.
pub fn solve(m: &BitMatrix, b: &BitVector) -> Result<Option<BitVector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let n = m.cols();
    let mut aug = vec![BitVector::zeros(n + 1); m.rows()];
    for (r, row) in aug.iter_mut().enumerate() {
        for &c in m.row(r) {
            row.set(c, true);
        }
        row.set(n, b.get(r));
    }
    let ech = Echelon::new(n + 1, aug);
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = BitVector::zeros(n);
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        if row.get(n) {
            x.set(p, true);
        }
    }
    Ok(Some(x))
}
