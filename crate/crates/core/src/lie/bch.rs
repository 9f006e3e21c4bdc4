use super::{first_non_lie_level, LiePolynomial};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::TensorSeries;

/// Baker–Campbell–Hausdorff product `log(exp(a) ⊗ exp(b))` at the common
/// truncation level of `a` and `b`.
///
/// Computed from the definition in the truncated algebra, so it is exact at
/// every level on rationals. Both arguments must be Lie elements.
pub fn bch<S: Scalar>(a: &TensorSeries<S>, b: &TensorSeries<S>) -> Result<TensorSeries<S>> {
    for x in [a, b] {
        if let Some(level) = first_non_lie_level(x) {
            return Err(Error::NotLie { level });
        }
    }
    a.exp()?.mul(&b.exp()?)?.log()
}

/// Iterated BCH of vectors `v1, ..., vm` in Lyndon coordinates:
/// `log(exp(v1) ⊗ ... ⊗ exp(vm))`, with `BCH(v1) = v1`.
pub fn bch_iterated<S: Scalar>(vs: &[Vec<S>], level: usize) -> Result<LiePolynomial<S>> {
    let (first, rest) = vs.split_first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    if dim == 0 {
        return Err(Error::InvalidArgument(
            "vectors must have dimension >= 1".into(),
        ));
    }
    if let Some(v) = rest.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: v.len(),
        });
    }
    if rest.is_empty() {
        return Ok(LiePolynomial::from_vector(level, first));
    }
    let mut prod = TensorSeries::one(dim, level);
    for v in vs {
        prod = prod.mul(&TensorSeries::from_vector(level, v).exp()?)?;
    }
    LiePolynomial::from_tensor(&prod.log()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{bracket, is_lie_series, LyndonWord};
    use crate::scalar::{rat, Rational};
    use crate::tensor::Word;

    type T = TensorSeries<Rational>;

    fn e(i: u16, level: usize) -> T {
        T::letter(2, level, i).unwrap()
    }

    #[test]
    fn matches_the_series_through_level_three() {
        let (a, b) = (e(1, 3), e(2, 3));
        let ab = bracket(&a, &b).unwrap();
        let ba = bracket(&b, &a).unwrap();
        let expect = a
            .add(&b)
            .unwrap()
            .add(&ab.scale(&rat(1, 2)))
            .unwrap()
            .add(
                &bracket(&a, &ab)
                    .unwrap()
                    .add(&bracket(&b, &ba).unwrap())
                    .unwrap()
                    .scale(&rat(1, 12)),
            )
            .unwrap();
        assert_eq!(bch(&a, &b).unwrap(), expect);
    }

    #[test]
    fn collinear_arguments_add() {
        let a = T::from_vector(6, &[rat(1, 2), rat(-2, 3)]);
        let b = a.scale(&rat(3, 1));
        assert_eq!(bch(&a, &b).unwrap(), a.add(&b).unwrap());
        assert!(bch(&a, &a.neg()).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_lie_input() {
        let not_lie = T::from_terms(2, 3, [(Word::from([1, 1]), rat(1, 1))]).unwrap();
        assert_eq!(bch(&not_lie, &e(1, 3)), Err(Error::NotLie { level: 2 }));
    }

    #[test]
    fn output_is_lie() {
        let a = T::from_vector(6, &[rat(1, 2), rat(-2, 3), rat(5, 1)]);
        let b = T::from_vector(6, &[rat(-1, 1), rat(4, 9), rat(0, 1)]);
        assert!(is_lie_series(&bch(&a, &b).unwrap()));
    }

    #[test]
    fn iterated_cases() {
        let l = bch_iterated(&[vec![rat(1, 1), rat(0, 1)]], 4).unwrap();
        assert_eq!(l.coeffs().len(), 1);
        assert_eq!(l.coeff(&LyndonWord::parse("1").unwrap()), rat(1, 1));

        let v = [rat(1, 3), rat(-1, 1)];
        let vs: Vec<Vec<Rational>> = [1, -2, 5]
            .iter()
            .map(|&k| v.iter().map(|x| x * rat(k, 1)).collect())
            .collect();
        let l = bch_iterated(&vs, 5).unwrap();
        let sum: Vec<Rational> = v.iter().map(|x| x * rat(4, 1)).collect();
        assert_eq!(l, LiePolynomial::from_vector(5, &sum));

        let (v1, v2) = (vec![rat(2, 1), rat(1, 1)], vec![rat(-1, 3), rat(1, 2)]);
        let l = bch_iterated(&[v1.clone(), v2.clone()], 5).unwrap();
        let direct = bch(&T::from_vector(5, &v1), &T::from_vector(5, &v2)).unwrap();
        assert_eq!(l.to_tensor(), direct);

        assert_eq!(bch_iterated::<Rational>(&[], 3), Err(Error::EmptyInput));
    }

    #[test]
    fn group_law_is_associative() {
        let vs = [
            vec![rat(1, 2), rat(1, 1)],
            vec![rat(-2, 1), rat(1, 3)],
            vec![rat(0, 1), rat(-5, 4)],
        ];
        let t: Vec<T> = vs.iter().map(|v| T::from_vector(5, v)).collect();
        let left = bch(&bch(&t[0], &t[1]).unwrap(), &t[2]).unwrap();
        assert_eq!(left, bch_iterated(&vs, 5).unwrap().to_tensor());
    }
}
