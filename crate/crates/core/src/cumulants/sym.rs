use crate::error::{Error, Result};
use crate::scalar::{is_one, Rational, Scalar};
use crate::tensor::{TensorSeries, Word};

/// Truncated series in `d` commuting letters, `Sym^(N)(R^d)`.
///
/// Monomials are keyed by sorted words (multisets of letters). Internally a
/// tensor series whose keys are all sorted; the product concatenates and
/// re-sorts.
#[derive(Clone, PartialEq, Debug)]
pub struct SymSeries<S = Rational>(TensorSeries<S>);

impl<S: Scalar> SymSeries<S> {
    pub fn zero(dim: usize, level: usize) -> Self {
        SymSeries(TensorSeries::zero(dim, level))
    }

    pub fn one(dim: usize, level: usize) -> Self {
        SymSeries(TensorSeries::one(dim, level))
    }

    /// Terms may use any letter order; keys are sorted on the way in.
    pub fn from_terms(
        dim: usize,
        level: usize,
        terms: impl IntoIterator<Item = (Word, S)>,
    ) -> Result<Self> {
        TensorSeries::from_terms(dim, level, terms.into_iter().map(|(w, c)| (w.sorted(), c)))
            .map(SymSeries)
    }

    /// Commutative image of a tensor series: the coefficient of a multiset
    /// is the sum over all of its orderings.
    pub fn from_tensor(t: &TensorSeries<S>) -> Self {
        let mut out = TensorSeries::zero(t.dim(), t.level());
        for (w, c) in t.terms() {
            out.add_term(w.sorted(), c.clone());
        }
        SymSeries(out)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn level(&self) -> usize {
        self.0.level()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.0.coeff(&w.sorted())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.0.terms()
    }

    pub fn level_terms(&self, k: usize) -> &std::collections::BTreeMap<Word, S> {
        self.0.level_terms(k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.0.add(&other.0).map(SymSeries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.0.sub(&other.0).map(SymSeries)
    }

    pub fn scale(&self, s: &S) -> Self {
        SymSeries(self.0.scale(s))
    }

    pub fn as_tensor(&self) -> &TensorSeries<S> {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_tensor(&self.0.mul(&other.0)?))
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.0.constant().is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.level();
        let one = Self::one(self.dim(), n);
        let mut acc = one.clone();
        for k in (1..=n).rev() {
            acc = one.add(&self.mul(&acc)?.scale(&S::from_ratio(1, k as i64)))?;
        }
        Ok(acc)
    }

    pub fn log(&self) -> Result<Self> {
        if !is_one(&self.0.constant()) {
            return Err(Error::ConstantNotOne);
        }
        let n = self.level();
        let one = Self::one(self.dim(), n);
        let y = self.sub(&one)?;
        if n == 0 {
            return Ok(Self::zero(self.dim(), 0));
        }
        let coeff = |k: usize| S::from_ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64);
        let mut acc = one.scale(&coeff(n));
        for k in (1..n).rev() {
            acc = one.scale(&coeff(k)).add(&y.mul(&acc)?)?;
        }
        y.mul(&acc)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.0.approx_eq(&other.0)
    }
}

pub fn sym_mul<S: Scalar>(a: &SymSeries<S>, b: &SymSeries<S>) -> Result<SymSeries<S>> {
    a.mul(b)
}

pub fn sym_exp<S: Scalar>(x: &SymSeries<S>) -> Result<SymSeries<S>> {
    x.exp()
}

pub fn sym_log<S: Scalar>(x: &SymSeries<S>) -> Result<SymSeries<S>> {
    x.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{factorial, rat};
    use proptest::prelude::*;

    type Y = SymSeries<Rational>;

    #[test]
    fn exp_of_one_letter() {
        let x = Y::from_terms(1, 6, [(Word::letter(1), rat(1, 1))]).unwrap();
        let e = x.exp().unwrap();
        for k in 0..=6 {
            let w = Word::new(vec![1; k]);
            assert_eq!(e.coeff(&w), rat(1, 1) / factorial::<Rational>(k));
        }
    }

    #[test]
    fn keys_are_sorted() {
        let y = Y::from_terms(
            3,
            3,
            [
                (Word::from([3, 1, 2]), rat(2, 1)),
                (Word::from([2, 1, 3]), rat(1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(y.level_terms(3).len(), 1);
        assert_eq!(y.coeff(&Word::from([1, 2, 3])), rat(3, 1));
        assert_eq!(y.coeff(&Word::from([3, 2, 1])), rat(3, 1));
    }

    #[test]
    fn exp_rejects_constant() {
        assert_eq!(Y::one(2, 2).exp(), Err(Error::NonZeroConstant));
        assert_eq!(Y::zero(2, 2).log(), Err(Error::ConstantNotOne));
    }

    fn arb_sym(dim: usize, level: usize) -> impl Strategy<Value = Y> {
        let words: Vec<Word> = (1..=level)
            .flat_map(|k| Word::all_of_length(dim, k))
            .filter(|w| *w == w.sorted())
            .collect();
        let n = words.len();
        proptest::collection::vec((-9i64..=9, 1i64..=9), n).prop_map(move |cs| {
            Y::from_terms(
                dim,
                level,
                words
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(|(a, b)| rat(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn product_commutes(a in arb_sym(3, 3), b in arb_sym(3, 3)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn log_inverts_exp(x in arb_sym(2, 5)) {
            prop_assert_eq!(x.exp().unwrap().log().unwrap(), x);
        }
    }
}
