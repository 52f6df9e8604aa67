//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT with lookahead).

use std::rc::Rc;

use crate::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// A letter: generator index and whether it is inverted.
pub type Letter = (usize, bool);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub involution: bool,
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<Generator>,
    pub relators: Vec<Vec<Letter>>,
}

fn power(word: &[Letter], k: usize) -> Vec<Letter> {
    word.iter().copied().cycle().take(word.len() * k).collect()
}

impl GroupPresentation {
    /// ⟨a, b, c | a², b², c², (ab)^r, (bc)^s, (ac)²⟩.
    pub fn triangle(r: usize, s: usize) -> Self {
        let generators = ["a", "b", "c"].iter().map(|n| Generator { name: (*n).into(), involution: true }).collect();
        let (a, b, c) = ((0, false), (1, false), (2, false));
        Self { generators, relators: vec![power(&[a, b], r), power(&[b, c], s), power(&[a, c], 2)] }
    }

    /// ⟨ρ, σ | ρ^r, σ^s, (ρσ)²⟩.
    pub fn rotation(r: usize, s: usize) -> Self {
        let generators = ["r", "s"].iter().map(|n| Generator { name: (*n).into(), involution: false }).collect();
        let (rho, sigma) = ((0, false), (1, false));
        Self { generators, relators: vec![power(&[rho], r), power(&[sigma], s), power(&[rho, sigma], 2)] }
    }

    fn validate(&self, words: &[Vec<Letter>]) -> Result<()> {
        for w in words {
            if w.is_empty() {
                return Err(Error::InvalidInput("empty relator".into()));
            }
            if let Some(&(g, _)) = w.iter().find(|(g, _)| *g >= self.generators.len()) {
                return Err(Error::InvalidInput(format!("relator uses unknown generator {g}")));
            }
        }
        Ok(())
    }
}

/// Right action of the generators on the elements of a finite quotient.
/// Coset 0 is the identity element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    order: usize,
    ncols: usize,
    /// (column, inverse column) per generator.
    columns: Vec<(usize, usize)>,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator_count(&self) -> usize {
        self.columns.len()
    }

    #[inline]
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        let (col, inv) = self.columns[letter.0];
        self.table[coset * self.ncols + if letter.1 { inv } else { col }] as usize
    }

    pub fn apply(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    pub fn permutation(&self, gen: usize) -> Vec<usize> {
        (0..self.order).map(|c| self.act(c, (gen, false))).collect()
    }

    /// True iff the word acts as the identity permutation.
    pub fn is_trivial(&self, word: &[Letter]) -> bool {
        (0..self.order).all(|c| self.apply(c, word) == c)
    }
}

struct Enumerator {
    ncols: usize,
    inv: Vec<usize>,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    live: usize,
    limit: usize,
    relators: Rc<Vec<Vec<usize>>>,
}

impl Enumerator {
    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn put(&mut self, c: usize, x: usize, d: u32) {
        self.table[c * self.ncols + x] = d;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn new_coset(&mut self) -> Result<u32> {
        if self.rows() >= self.limit {
            return Err(Error::CosetLimit { limit: self.limit });
        }
        let id = self.rows() as u32;
        self.parent.push(id);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        Ok(id)
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        let d = self.new_coset()?;
        self.put(c, x, d);
        self.put(d as usize, self.inv[x], c as u32);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i] as usize;
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                let xi = self.inv[x];
                if self.get(d as usize, xi) == g as u32 {
                    self.put(d as usize, xi, UNDEF);
                }
                let mu = self.rep(g as u32) as usize;
                let nu = self.rep(d) as usize;
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu as u32, mx);
                } else {
                    let nx = self.get(nu, xi);
                    if nx != UNDEF {
                        self.merge(mu as u32, nx);
                    } else {
                        self.put(mu, x, nu as u32);
                        self.put(nu, xi, mu as u32);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans relator `w` at coset `alpha`; fills gaps by defining new cosets when `fill` is set.
    fn scan(&mut self, alpha: usize, w: &[usize], fill: bool) -> Result<()> {
        let mut f = alpha as u32;
        let mut b = alpha as u32;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let next = self.get(f as usize, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b as usize, self.inv[w[j - 1]]);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = w[i];
                self.put(f as usize, x, b);
                self.put(b as usize, self.inv[x], f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f as usize, w[i])?;
        }
    }

    /// Scans every relator at every live coset without defining anything.
    fn lookahead(&mut self) -> Result<()> {
        let relators = Rc::clone(&self.relators);
        for c in 0..self.rows() {
            for w in relators.iter() {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, w, false)?;
            }
        }
        Ok(())
    }

    /// Drops dead cosets, renumbering the survivors in ascending order.
    /// Returns the new index of `keep`, or the first live coset after it.
    fn compact(&mut self, keep: usize) -> usize {
        let n = self.rows();
        let mut map = vec![UNDEF; n];
        let mut next = 0u32;
        for c in 0..n {
            if self.is_live(c) {
                map[c] = next;
                next += 1;
            }
        }
        let new_keep = (keep..n).find(|&c| map[c] != UNDEF).map_or(next as usize, |c| map[c] as usize);
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for c in (0..n).filter(|&c| self.is_live(c)) {
            for x in 0..self.ncols {
                let d = self.get(c, x);
                table.push(if d == UNDEF { UNDEF } else { map[d as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next as usize;
        new_keep
    }

    fn run(&mut self) -> Result<()> {
        self.new_coset()?;
        let mut alpha = 0;
        while alpha < self.rows() {
            if self.is_live(alpha) {
                match self.process(alpha) {
                    Ok(()) => {}
                    Err(Error::CosetLimit { .. }) => {
                        self.lookahead()?;
                        let before = self.rows();
                        alpha = self.compact(alpha);
                        if self.rows() * 10 > before * 9 {
                            return Err(Error::CosetLimit { limit: self.limit });
                        }
                        continue;
                    }
                    Err(e) => return Err(e),
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    fn process(&mut self, alpha: usize) -> Result<()> {
        let relators = Rc::clone(&self.relators);
        for w in relators.iter() {
            if !self.is_live(alpha) {
                return Ok(());
            }
            self.scan(alpha, w, true)?;
        }
        for x in 0..self.ncols {
            if !self.is_live(alpha) {
                return Ok(());
            }
            if self.get(alpha, x) == UNDEF {
                self.define(alpha, x)?;
            }
        }
        Ok(())
    }
}

/// Regular permutation representation of G/N, where N is the normal closure of `extra`.
pub fn enumerate_quotient(pres: &GroupPresentation, extra: &[Vec<Letter>], max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::InvalidInput("max_cosets must be at least 1".into()));
    }
    pres.validate(&pres.relators)?;
    pres.validate(extra)?;
    let mut columns = Vec::new();
    let mut inv = Vec::new();
    for g in &pres.generators {
        let col = inv.len();
        if g.involution {
            inv.push(col);
            columns.push((col, col));
        } else {
            inv.push(col + 1);
            inv.push(col);
            columns.push((col, col + 1));
        }
    }
    let ncols = inv.len();
    let to_cols = |w: &Vec<Letter>| -> Vec<usize> {
        w.iter().map(|&(g, i)| if i { columns[g].1 } else { columns[g].0 }).collect()
    };
    let mut relators: Vec<Vec<usize>> = pres.relators.iter().map(to_cols).collect();
    relators.extend(extra.iter().map(to_cols));
    let mut e = Enumerator {
        ncols,
        inv,
        table: Vec::new(),
        parent: Vec::new(),
        queue: Vec::new(),
        live: 0,
        limit: max_cosets,
        relators: Rc::new(relators),
    };
    e.run()?;
    e.compact(0);
    let order = e.rows();
    debug_assert!(e.table.iter().all(|&d| d != UNDEF));
    Ok(CosetTable { order, ncols, columns, table: e.table })
}
