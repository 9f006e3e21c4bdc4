use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word over the alphabet `{1, ..., d}`; its length is its tensor level.
///
/// Ordering is lexicographic with a proper prefix sorting first. Words of a
/// single level therefore sort in plain lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<u16>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(i: u16) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letters sorted ascending: the multiset key of the commutative image.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn check(&self, dim: usize) -> Result<()> {
        match self.0.iter().find(|&&c| c == 0 || c as usize > dim) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, dim }),
            None => Ok(()),
        }
    }

    /// All `dim^k` words of length `k`, in lexicographic order.
    pub fn all_of_length(dim: usize, k: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=dim as u16).map(move |c| {
                        let mut v = w.0.clone();
                        v.push(c);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<&[u16]> for Word {
    fn from(v: &[u16]) -> Self {
        Word(v.to_vec())
    }
}

impl<const K: usize> From<[u16; K]> for Word {
    fn from(v: [u16; K]) -> Self {
        Word(v.to_vec())
    }
}

/// Comma-separated 1-based letters; the empty word renders as `""`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}
