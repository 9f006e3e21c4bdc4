//! Free Lie algebra layer.
//!
//! Lie elements live inside [`TensorSeries`]; [`LiePolynomial`] holds their
//! coordinates on the Lyndon basis, where each Lyndon word stands for its
//! standard-factorization bracketing. Membership is decided with the Dynkin
//! idempotent: a homogeneous element `x` of level `k` is Lie iff the
//! right-normed bracketing map sends it to `k x`.

mod bch;
mod lyndon;

use std::collections::BTreeMap;

pub use bch::{bch, bch_iterated};
pub use lyndon::{is_lyndon, lyndon_words, LyndonWord};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{TensorSeries, Word};

/// `[x, y] = x ⊗ y - y ⊗ x`, truncated.
pub fn bracket<S: Scalar>(x: &TensorSeries<S>, y: &TensorSeries<S>) -> Result<TensorSeries<S>> {
    x.mul(y)?.sub(&y.mul(x)?)
}

/// Right-normed bracketing `[w1,[w2,[...,wk]]]` of a single word.
fn right_bracketing(w: &Word) -> BTreeMap<Word, i64> {
    let letters = w.letters();
    let Some((&last, rest)) = letters.split_last() else {
        return BTreeMap::new();
    };
    let mut acc = BTreeMap::from([(Word::letter(last), 1i64)]);
    for &a in rest.iter().rev() {
        acc = lyndon::word_bracket(&BTreeMap::from([(Word::letter(a), 1)]), &acc);
    }
    acc
}

/// First level `k` at which the Dynkin test fails, if any. A nonzero
/// constant term counts as failing at level 0.
pub fn first_non_lie_level<S: Scalar>(t: &TensorSeries<S>) -> Option<usize> {
    let scale = t.max_abs();
    if !t.constant().is_negligible(scale) {
        return Some(0);
    }
    for k in 2..=t.level() {
        let level = t.level_terms(k);
        let mut image: BTreeMap<Word, S> = BTreeMap::new();
        for (w, c) in level {
            for (v, m) in right_bracketing(w) {
                image
                    .entry(v)
                    .or_insert_with(S::zero)
                    .add_assign_ref(&c.mul_ref(&S::from_i64(m)));
            }
        }
        let kk = S::from_i64(k as i64);
        for (w, c) in level {
            image
                .entry(w.clone())
                .or_insert_with(S::zero)
                .sub_assign_ref(&c.mul_ref(&kk));
        }
        if image.values().any(|c| !c.is_negligible(scale * k as f64)) {
            return Some(k);
        }
    }
    None
}

/// Dynkin criterion at every level `1..=N`.
pub fn is_lie_series<S: Scalar>(t: &TensorSeries<S>) -> bool {
    first_non_lie_level(t).is_none()
}

/// Coordinates of a truncated Lie element on the Lyndon basis.
#[derive(Clone, PartialEq, Debug)]
pub struct LiePolynomial<S = Rational> {
    dim: usize,
    level: usize,
    coeffs: BTreeMap<LyndonWord, S>,
}

impl<S: Scalar> LiePolynomial<S> {
    pub fn zero(dim: usize, level: usize) -> Self {
        LiePolynomial {
            dim,
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        dim: usize,
        level: usize,
        terms: impl IntoIterator<Item = (LyndonWord, S)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim, level);
        for (w, c) in terms {
            w.word().check(dim)?;
            if w.len() > level {
                return Err(Error::WordTooLong {
                    len: w.len(),
                    level,
                });
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    /// A vector of `R^d` as a degree-one Lie polynomial.
    pub fn from_vector(level: usize, v: &[S]) -> Self {
        let mut p = Self::zero(v.len(), level);
        if level >= 1 {
            for (i, c) in v.iter().enumerate() {
                let w = LyndonWord::new(Word::letter(i as u16 + 1)).expect("letters are Lyndon");
                p.add_term(w, c.clone());
            }
        }
        p
    }

    fn add_term(&mut self, w: LyndonWord, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(x) => {
                x.add_assign_ref(&c);
                if x.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &BTreeMap<LyndonWord, S> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &LyndonWord) -> S {
        self.coeffs.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Longest Lyndon word carrying a nonzero coordinate.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(LyndonWord::len).max()
    }

    /// Coordinates on Lyndon words of length exactly `k`.
    pub fn level_part(&self, k: usize) -> impl Iterator<Item = (&LyndonWord, &S)> {
        self.coeffs.iter().filter(move |(w, _)| w.len() == k)
    }

    /// Expands every basis element into its bracketing.
    pub fn to_tensor(&self) -> TensorSeries<S> {
        let mut t = TensorSeries::zero(self.dim, self.level);
        let terms = self.coeffs.iter().flat_map(|(lw, c)| {
            lw.expansion()
                .into_iter()
                .map(move |(w, m)| (w, c.mul_ref(&S::from_i64(m))))
        });
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    /// Recovers Lyndon coordinates by triangular elimination: the smallest
    /// remaining word of each level must be Lyndon, and its basis element
    /// has that word as leading term with coefficient one.
    pub fn from_tensor(t: &TensorSeries<S>) -> Result<Self> {
        if let Some(level) = first_non_lie_level(t) {
            return Err(Error::NotLie { level });
        }
        let scale = t.max_abs();
        let mut p = Self::zero(t.dim(), t.level());
        for k in 1..=t.level() {
            let mut residual: BTreeMap<Word, S> = t.level_terms(k).clone();
            while let Some((w, c)) = residual.pop_first() {
                if c.is_negligible(scale) {
                    continue;
                }
                let lw = LyndonWord::new(w).ok_or(Error::NotLie { level: k })?;
                for (v, m) in lw.expansion().into_iter().skip(1) {
                    let e = residual.entry(v).or_insert_with(S::zero);
                    e.sub_assign_ref(&c.mul_ref(&S::from_i64(m)));
                }
                residual.retain(|_, x| !x.is_zero());
                p.coeffs.insert(lw, c);
            }
        }
        Ok(p)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LiePolynomial<T> {
        let mut p = LiePolynomial::zero(self.dim, self.level);
        for (w, c) in &self.coeffs {
            p.add_term(w.clone(), f(c));
        }
        p
    }
}

/// Free-function spelling of [`LiePolynomial::to_tensor`].
pub fn lyndon_to_tensor<S: Scalar>(l: &LiePolynomial<S>) -> TensorSeries<S> {
    l.to_tensor()
}

/// Free-function spelling of [`LiePolynomial::from_tensor`].
pub fn tensor_to_lyndon<S: Scalar>(t: &TensorSeries<S>) -> Result<LiePolynomial<S>> {
    LiePolynomial::from_tensor(t)
}
