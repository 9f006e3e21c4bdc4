use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::tensor::Word;

/// A Lyndon word: strictly smaller than each of its proper rotations.
///
/// Sorted by length first, then lexicographically, which is the order in
/// which Lie coordinates are printed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LyndonWord(Word);

pub fn is_lyndon(w: &[u16]) -> bool {
    // Equivalent to the rotation criterion: strictly smaller than every
    // proper suffix.
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

impl LyndonWord {
    pub fn new(w: Word) -> Option<Self> {
        is_lyndon(w.letters()).then_some(LyndonWord(w))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let w: Word = s.parse()?;
        LyndonWord::new(w).ok_or_else(|| Error::Parse(format!("{s:?} is not a Lyndon word")))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Standard factorization `w = uv`, `v` the longest proper Lyndon
    /// suffix. `None` for single letters.
    pub fn factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        let l = self.0.letters();
        (1..l.len()).find(|&i| is_lyndon(&l[i..])).map(|i| {
            (
                LyndonWord(Word::from(&l[..i])),
                LyndonWord(Word::from(&l[i..])),
            )
        })
    }

    /// Nested bracket notation, e.g. `[1,[1,2]]`.
    pub fn bracket_string(&self) -> String {
        match self.factorization() {
            None => self.0.to_string(),
            Some((u, v)) => format!("[{},{}]", u.bracket_string(), v.bracket_string()),
        }
    }

    /// Integer expansion of the bracketed basis element in the word basis.
    pub fn expansion(&self) -> BTreeMap<Word, i64> {
        match self.factorization() {
            None => BTreeMap::from([(self.0.clone(), 1)]),
            Some((u, v)) => word_bracket(&u.expansion(), &v.expansion()),
        }
    }
}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LyndonWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket_string())
    }
}

/// `[x, y] = xy - yx` on homogeneous integer word combinations.
pub(crate) fn word_bracket(
    x: &BTreeMap<Word, i64>,
    y: &BTreeMap<Word, i64>,
) -> BTreeMap<Word, i64> {
    let mut out = BTreeMap::new();
    for (u, a) in x {
        for (v, b) in y {
            *out.entry(u.concat(v)).or_insert(0) += a * b;
            *out.entry(v.concat(u)).or_insert(0) -= a * b;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Lyndon words of length exactly `k` over `{1..dim}`, lexicographically
/// sorted (Duval's generation).
pub fn lyndon_words(dim: usize, k: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if dim == 0 || k == 0 {
        return out;
    }
    let d = dim as u16;
    let mut w: Vec<u16> = vec![1];
    loop {
        if w.len() == k {
            out.push(LyndonWord(Word::new(w.clone())));
        }
        let m = w.len();
        while w.len() < k {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&d) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::parse(s).unwrap()
    }

    fn names(ws: &[LyndonWord]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_lists() {
        assert_eq!(names(&lyndon_words(2, 1)), ["1", "2"]);
        assert_eq!(names(&lyndon_words(2, 2)), ["1,2"]);
        assert_eq!(names(&lyndon_words(2, 3)), ["1,1,2", "1,2,2"]);
        assert_eq!(names(&lyndon_words(3, 2)), ["1,2", "1,3", "2,3"]);
        assert!(lyndon_words(1, 2).is_empty());
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&[1]));
        assert!(is_lyndon(&[1, 1, 2]));
        assert!(is_lyndon(&[1, 2, 1, 2, 2]));
        assert!(!is_lyndon(&[1, 2, 1, 2]));
        assert!(!is_lyndon(&[2, 1]));
        assert!(!is_lyndon(&[1, 1]));
        assert!(!is_lyndon(&[]));
    }

    #[test]
    fn standard_factorization() {
        let (u, v) = lw("1,1,2").factorization().unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("1".into(), "1,2".into()));
        let (u, v) = lw("1,2,2").factorization().unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("1,2".into(), "2".into()));
        let (u, v) = lw("1,1,2,1,2").factorization().unwrap();
        assert_eq!(
            (u.to_string(), v.to_string()),
            ("1,1,2".into(), "1,2".into())
        );
        assert!(lw("3").factorization().is_none());
    }

    #[test]
    fn bracket_strings() {
        assert_eq!(lw("1,1,2").bracket_string(), "[1,[1,2]]");
        assert_eq!(lw("1,2,2").bracket_string(), "[[1,2],2]");
        assert_eq!(lw("2").bracket_string(), "2");
    }

    #[test]
    fn leading_word_is_the_lyndon_word() {
        for k in 1..=6 {
            for l in lyndon_words(3, k) {
                let e = l.expansion();
                let (first, c) = e.iter().next().unwrap();
                assert_eq!(first, l.word());
                assert_eq!(*c, 1);
            }
        }
    }

    #[test]
    fn ordering_is_graded() {
        let mut v = vec![lw("1,2"), lw("2"), lw("1,1,2"), lw("1")];
        v.sort();
        assert_eq!(names(&v), ["1", "2", "1,2", "1,1,2"]);
    }
}
