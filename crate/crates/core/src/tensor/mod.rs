//! The truncated free tensor algebra `T^(N)(R^d)`.
//!
//! A [`TensorSeries`] is stored sparsely: one `Word -> coefficient` map per
//! level `0..=N`, with zero coefficients never stored. Two series are equal
//! exactly when their maps are equal, so exact-arithmetic identities reduce
//! to `==`.
//!
//! All binary operations require both operands to share the alphabet size
//! and the truncation level. Mixing levels is an error rather than a silent
//! truncation.

mod shuffle;
mod word;

use std::collections::BTreeMap;

pub use shuffle::shuffle;
pub use word::Word;

use crate::error::{Error, Result};
use crate::scalar::{is_one, Rational, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct TensorSeries<S = Rational> {
    dim: usize,
    levels: Vec<BTreeMap<Word, S>>,
}

impl<S: Scalar> TensorSeries<S> {
    pub fn zero(dim: usize, level: usize) -> Self {
        assert!(dim >= 1, "alphabet must be nonempty");
        TensorSeries {
            dim,
            levels: vec![BTreeMap::new(); level + 1],
        }
    }

    /// The unit `1`.
    pub fn one(dim: usize, level: usize) -> Self {
        let mut t = Self::zero(dim, level);
        t.levels[0].insert(Word::empty(), S::one());
        t
    }

    /// Basis vector `e_i` (1-based) placed at level one.
    pub fn letter(dim: usize, level: usize, i: u16) -> Result<Self> {
        Self::from_terms(dim, level, [(Word::letter(i), S::one())])
    }

    /// Embeds a vector of `R^d` at level one.
    pub fn from_vector(level: usize, v: &[S]) -> Self {
        let mut t = Self::zero(v.len(), level);
        if level >= 1 {
            for (i, c) in v.iter().enumerate() {
                t.add_term(Word::letter(i as u16 + 1), c.clone());
            }
        }
        t
    }

    /// Builds a series from `(word, coefficient)` pairs; repeated words add up.
    pub fn from_terms(
        dim: usize,
        level: usize,
        terms: impl IntoIterator<Item = (Word, S)>,
    ) -> Result<Self> {
        let mut t = Self::zero(dim, level);
        for (w, c) in terms {
            w.check(dim)?;
            if w.len() > level {
                return Err(Error::WordTooLong {
                    len: w.len(),
                    level,
                });
            }
            t.add_term(w, c);
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Truncation level `N`.
    pub fn level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.levels
            .get(w.len())
            .and_then(|m| m.get(w))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// The stored terms of level `k`.
    pub fn level_terms(&self, k: usize) -> &BTreeMap<Word, S> {
        &self.levels[k]
    }

    /// All stored terms, graded by level and lexicographic within a level.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.levels.iter().flat_map(|m| m.iter())
    }

    pub fn num_terms(&self) -> usize {
        self.levels.iter().map(BTreeMap::len).sum()
    }

    pub fn constant(&self) -> S {
        self.coeff(&Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(BTreeMap::is_empty)
    }

    pub fn is_level_zero(&self, k: usize) -> bool {
        self.levels[k].is_empty()
    }

    /// Largest level carrying a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.levels.iter().rposition(|m| !m.is_empty())
    }

    /// `pi_k`: keep only level `k`, same truncation level.
    pub fn project(&self, k: usize) -> Self {
        let mut t = Self::zero(self.dim, self.level());
        if k <= self.level() {
            t.levels[k] = self.levels[k].clone();
        }
        t
    }

    /// Drops every level above `level` and lowers the truncation level.
    pub fn truncate(&self, level: usize) -> Self {
        let keep = level.min(self.level());
        let mut t = Self::zero(self.dim, level);
        t.levels[..=keep].clone_from_slice(&self.levels[..=keep]);
        t
    }

    /// Largest absolute coefficient, as a float.
    pub fn max_abs(&self) -> f64 {
        self.terms()
            .map(|(_, c)| c.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let level = &mut self.levels[w.len()];
        match level.get_mut(&w) {
            Some(x) => {
                x.add_assign_ref(&c);
                if x.is_zero() {
                    level.remove(&w);
                }
            }
            None => {
                level.insert(w, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.level() != other.level() {
            return Err(Error::LevelMismatch {
                left: self.level(),
                right: other.level(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.dim, self.level());
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c.mul_ref(s));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// Truncated concatenation product `self ⊗ other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.level();
        let mut out = Self::zero(self.dim, n);
        for (i, left) in self.levels.iter().enumerate() {
            for right in other.levels.iter().take(n + 1 - i) {
                for (u, a) in left {
                    for (v, b) in right {
                        out.add_term(u.concat(v), a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Truncated exponential `sum_k x^k / k!`, evaluated Horner-style as
    /// `1 + x(1 + x/2(1 + ... (1 + x/N)))`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.level();
        let one = Self::one(self.dim, n);
        let mut acc = one.clone();
        for k in (1..=n).rev() {
            let step = self.mul(&acc)?.scale(&S::from_ratio(1, k as i64));
            acc = one.add(&step)?;
        }
        Ok(acc)
    }

    /// Truncated logarithm `sum_k (-1)^(k-1) y^k / k` with `y = self - 1`,
    /// evaluated Horner-style.
    pub fn log(&self) -> Result<Self> {
        if !is_one(&self.constant()) {
            return Err(Error::ConstantNotOne);
        }
        let n = self.level();
        let one = Self::one(self.dim, n);
        let y = self.sub(&one)?;
        if n == 0 {
            return Ok(Self::zero(self.dim, 0));
        }
        let coeff = |k: usize| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            S::from_ratio(sign, k as i64)
        };
        let mut acc = one.scale(&coeff(n));
        for k in (1..n).rev() {
            acc = one.scale(&coeff(k)).add(&y.mul(&acc)?)?;
        }
        y.mul(&acc)
    }

    /// Group inverse `sum_k (1 - self)^k`.
    pub fn inverse(&self) -> Result<Self> {
        if !is_one(&self.constant()) {
            return Err(Error::ConstantNotOne);
        }
        let one = Self::one(self.dim, self.level());
        let z = one.sub(self)?;
        let mut acc = one.clone();
        for _ in 0..self.level() {
            acc = one.add(&z.mul(&acc)?)?;
        }
        Ok(acc)
    }

    /// Shuffle test for group-likeness: `<S,u><S,v> = sum_{w in u ⧢ v} <S,w>`
    /// for every pair of nonempty words with `|u| + |v| <= N`.
    ///
    /// Exact on rationals; the float backend uses the crate-wide relative
    /// zero rule.
    pub fn is_grouplike(&self) -> bool {
        let scale = self.max_abs();
        if !(self.constant() - S::one()).is_negligible(scale) {
            return false;
        }
        let n = self.level();
        for a in 1..n {
            let left = Word::all_of_length(self.dim, a);
            for b in a..=(n - a) {
                let right = Word::all_of_length(self.dim, b);
                for u in &left {
                    let su = self.coeff(u);
                    for v in &right {
                        let lhs = su.mul_ref(&self.coeff(v));
                        let mut rhs = S::zero();
                        for (w, mult) in shuffle(u, v) {
                            rhs.add_assign_ref(&(self.coeff(&w) * S::from_i64(mult as i64)));
                        }
                        if !(lhs - rhs).is_negligible(scale * scale) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Equality under the backend's zero rule. For rationals this is `==`.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.dim != other.dim || self.level() != other.level() {
            return false;
        }
        if S::EXACT {
            return self == other;
        }
        let scale = self.max_abs().max(other.max_abs());
        match self.sub(other) {
            Ok(d) => d.terms().all(|(_, c)| c.is_negligible(scale)),
            Err(_) => false,
        }
    }

    /// Applies `f` to every coefficient, e.g. to change backend.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TensorSeries<T> {
        let mut out = TensorSeries::zero(self.dim, self.level());
        for (w, c) in self.terms() {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// `self ⊗ (1 + v)` for a level-one increment `v`; one step of the
    /// Euler scheme for `dS = S ⊗ dγ`.
    pub(crate) fn mul_one_plus_vector(&self, v: &[S]) -> Self {
        let n = self.level();
        let mut out = self.clone();
        for level in self.levels.iter().take(n) {
            for (w, c) in level {
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        out.add_term(w.concat(&Word::letter(i as u16 + 1)), c.mul_ref(x));
                    }
                }
            }
        }
        out
    }
}
