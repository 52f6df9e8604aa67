//! Relator words and their text grammar.
//!
//! Tokens: `a b c` (reflections), `r R` (ρ = ab and its inverse), `s S`
//! (σ = bc and its inverse). Parentheses group, `^k` repeats (negative k
//! inverts), commas separate words, whitespace is ignored.

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    A,
    B,
    C,
    Rho,
    RhoInv,
    Sigma,
    SigmaInv,
}

impl Symbol {
    pub fn inverse(self) -> Symbol {
        match self {
            Symbol::Rho => Symbol::RhoInv,
            Symbol::RhoInv => Symbol::Rho,
            Symbol::Sigma => Symbol::SigmaInv,
            Symbol::SigmaInv => Symbol::Sigma,
            s => s,
        }
    }

    fn from_char(c: char) -> Option<Symbol> {
        Some(match c {
            'a' => Symbol::A,
            'b' => Symbol::B,
            'c' => Symbol::C,
            'r' => Symbol::Rho,
            'R' => Symbol::RhoInv,
            's' => Symbol::Sigma,
            'S' => Symbol::SigmaInv,
            _ => return None,
        })
    }

    fn to_char(self) -> char {
        match self {
            Symbol::A => 'a',
            Symbol::B => 'b',
            Symbol::C => 'c',
            Symbol::Rho => 'r',
            Symbol::RhoInv => 'R',
            Symbol::Sigma => 's',
            Symbol::SigmaInv => 'S',
        }
    }
}

/// A word over [`Symbol`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RelatorWord(pub Vec<Symbol>);

impl RelatorWord {
    pub fn inverse(&self) -> RelatorWord {
        RelatorWord(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// Spelled out over the reflections: 0 = a, 1 = b, 2 = c.
    pub fn reflection_letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(2 * self.0.len());
        for s in &self.0 {
            match s {
                Symbol::A => out.push(0),
                Symbol::B => out.push(1),
                Symbol::C => out.push(2),
                Symbol::Rho => out.extend([0, 1]),
                Symbol::RhoInv => out.extend([1, 0]),
                Symbol::Sigma => out.extend([1, 2]),
                Symbol::SigmaInv => out.extend([2, 1]),
            }
        }
        out
    }

    /// Spelled out over the rotations ρ, σ as (generator, inverted) pairs.
    /// Fails if the word contains a bare reflection.
    pub fn rotation_letters(&self) -> Result<Vec<(usize, bool)>> {
        self.0
            .iter()
            .map(|s| match s {
                Symbol::Rho => Ok((0, false)),
                Symbol::RhoInv => Ok((0, true)),
                Symbol::Sigma => Ok((1, false)),
                Symbol::SigmaInv => Ok((1, true)),
                other => Err(Error::InvalidInput(format!("'{}' is not a rotation", other.to_char()))),
            })
            .collect()
    }
}

impl std::fmt::Display for RelatorWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl std::str::FromStr for RelatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let word = parse_sequence(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("unexpected '{}' at position {pos}", chars[pos])));
        }
        if word.is_empty() {
            return Err(Error::Parse("empty relator".into()));
        }
        Ok(RelatorWord(word))
    }
}

/// Parses a comma-separated list of relators.
pub fn parse_relators(text: &str) -> Result<Vec<RelatorWord>> {
    text.split(',').filter(|w| !w.trim().is_empty()).map(str::parse).collect()
}

fn parse_sequence(chars: &[char], pos: &mut usize) -> Result<Vec<Symbol>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let item = if c == '(' {
            *pos += 1;
            let inner = parse_sequence(chars, pos)?;
            if chars.get(*pos) != Some(&')') {
                return Err(Error::Parse("unbalanced parenthesis".into()));
            }
            *pos += 1;
            inner
        } else if c == ')' {
            break;
        } else if let Some(sym) = Symbol::from_char(c) {
            *pos += 1;
            vec![sym]
        } else {
            return Err(Error::Parse(format!("unexpected '{c}' at position {pos}")));
        };
        let exponent = parse_exponent(chars, pos)?;
        let base = if exponent < 0 { RelatorWord(item).inverse().0 } else { item };
        for _ in 0..exponent.unsigned_abs() {
            out.extend_from_slice(&base);
        }
    }
    Ok(out)
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64> {
    if chars.get(*pos) != Some(&'^') {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    if chars.get(*pos) == Some(&'-') {
        *pos += 1;
    }
    while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    let text: String = chars[start..*pos].iter().collect();
    text.parse().map_err(|_| Error::Parse(format!("bad exponent '{text}'")))
}
