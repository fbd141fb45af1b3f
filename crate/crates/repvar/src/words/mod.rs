//! Free-group words, group presentations and Fox free differential
//! calculus.

mod group_ring;
mod parse;
mod presentation;

pub use group_ring::{fox_derivative, GroupRingElement};
pub use parse::parse_presentation;
pub use presentation::Presentation;

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}` at byte {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("duplicate generator `{name}`")]
    DuplicateGenerator { name: String },
    #[error("abelianization does not vanish on relator {relator} (value {value})")]
    InvalidAbelianization { relator: usize, value: i64 },
    #[error("presentation has no abelianization data")]
    MissingAbelianization,
    #[error("letter references generator {index} of {count}")]
    BadGeneratorIndex { index: usize, count: usize },
}

/// A freely reduced word in a free group; letters are
/// (generator index, sign).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // compact placeholder names g0, g1, ...
        let max = self.max_generator().map_or(0, |m| m + 1);
        let names: Vec<String> = (0..max).map(|i| format!("g{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: vec![] }
    }

    pub fn generator(index: usize) -> Self {
        Word {
            letters: vec![(index, 1)],
        }
    }

    /// Build a word from letters, performing free reduction.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = vec![];
        for (g, s) in letters {
            assert!(s == 1 || s == -1, "letter sign must be +1 or -1");
            match out.last() {
                Some(&(g2, s2)) if g2 == g && s2 == -s => {
                    out.pop();
                }
                _ => out.push((g, s)),
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(rhs.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, s)| (g, -s))
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// [u, v] = u v u^-1 v^-1
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Render with the given generator names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        // group equal adjacent letters into powers
        let mut i = 0;
        let letters = self.word.letters();
        let mut first = true;
        while i < letters.len() {
            let (g, s) = letters[i];
            let mut j = i + 1;
            while j < letters.len() && letters[j] == (g, s) {
                j += 1;
            }
            let e = (j - i) as i64 * s as i64;
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self.names.get(g).map(|s| s.as_str()).unwrap_or("?");
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            i = j;
        }
        Ok(())
    }
}
