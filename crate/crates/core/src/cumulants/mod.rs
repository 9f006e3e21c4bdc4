//! Moment and cumulant transforms of Gaussian data, in the symmetric and
//! tensor algebras.
//!
//! For `X ~ N(b, a)` the cumulant transform `log E(exp(X))` is the
//! quadratic `b + a/2`. [`isserlis_moments`] computes the moment transform
//! independently, by summing Gaussian moments over pairings, so the closed
//! form can be checked against it.

mod sym;

use std::collections::BTreeMap;

pub use sym::{sym_exp, sym_log, sym_mul, SymSeries};

use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational, Scalar};
use crate::tensor::{TensorSeries, Word};

/// Mean and covariance of a Gaussian vector.
///
/// The covariance must be symmetric. Positive semidefiniteness is not
/// required: every identity here is algebraic. A warning is logged when it
/// fails.
#[derive(Clone, PartialEq, Debug)]
pub struct GaussianSpec<S = Rational> {
    mean: Vec<S>,
    cov: Vec<Vec<S>>,
}

impl<S: Scalar> GaussianSpec<S> {
    pub fn new(mean: Vec<S>, cov: Vec<Vec<S>>) -> Result<Self> {
        let d = mean.len();
        if d == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        check_square(&cov, d)?;
        let scale = cov
            .iter()
            .flatten()
            .map(|x| x.to_f64().abs())
            .fold(0.0, f64::max);
        for (i, row) in cov.iter().enumerate() {
            for (j, x) in row.iter().enumerate().skip(i + 1) {
                if !(x.clone() - cov[j][i].clone()).is_negligible(scale) {
                    return Err(Error::InvalidArgument(format!(
                        "covariance is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let g = GaussianSpec { mean, cov };
        if !g.is_psd() {
            log::warn!("covariance is not positive semidefinite; identities still hold formally");
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &[S] {
        &self.mean
    }

    pub fn cov(&self) -> &[Vec<S>] {
        &self.cov
    }

    /// Every principal minor is nonnegative.
    pub fn is_psd(&self) -> bool {
        let d = self.dim();
        (1u32..(1 << d)).all(|mask| {
            let idx: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<S>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.cov[i][j].clone()).collect())
                .collect();
            let det = determinant(sub);
            det.is_negligible(1.0) || det.is_positive()
        })
    }
}

fn check_square<S>(a: &[Vec<S>], d: usize) -> Result<()> {
    if a.len() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: a.len(),
        });
    }
    if let Some(r) = a.iter().find(|r| r.len() != d) {
        return Err(Error::DimensionMismatch {
            left: d,
            right: r.len(),
        });
    }
    Ok(())
}

fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    let mut det = S::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return S::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        let (top, bottom) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            let f = row[col].clone() / p.clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                x.sub_assign_ref(&f.mul_ref(y));
            }
        }
    }
    det
}

/// The cumulant transform `b + a/2` as a degree-two symmetric series. The
/// monomial `{i, j}`, `i < j`, collects `a_ij/2 + a_ji/2 = a_ij`.
pub fn gaussian_cumulant<S: Scalar>(g: &GaussianSpec<S>, level: usize) -> SymSeries<S> {
    let d = g.dim();
    let half = S::from_ratio(1, 2);
    let mut terms = Vec::new();
    if level >= 1 {
        for i in 0..d {
            terms.push((Word::letter(i as u16 + 1), g.mean[i].clone()));
        }
    }
    if level >= 2 {
        for i in 0..d {
            for j in 0..d {
                let w = Word::from([i as u16 + 1, j as u16 + 1]);
                terms.push((w, g.cov[i][j].mul_ref(&half)));
            }
        }
    }
    SymSeries::from_terms(d, level, terms).expect("letters within dimension")
}

/// `E(X_{i1} ... X_{ik})` by Isserlis: sum over partitions of the index list
/// into singletons (weight `b_i`) and pairs (weight `a_ij`).
fn gaussian_moment<S: Scalar>(g: &GaussianSpec<S>, idx: &[usize]) -> S {
    let Some((&first, rest)) = idx.split_first() else {
        return S::one();
    };
    let mut total = g.mean[first].mul_ref(&gaussian_moment(g, rest));
    for j in 0..rest.len() {
        let a = &g.cov[first][rest[j]];
        if a.is_zero() {
            continue;
        }
        let mut remaining = rest.to_vec();
        remaining.remove(j);
        total = total + a.mul_ref(&gaussian_moment(g, &remaining));
    }
    total
}

/// Nondecreasing words of length `k`: one per multiset.
fn multisets(dim: usize, k: usize) -> Vec<Word> {
    Word::all_of_length(dim, k)
        .into_iter()
        .filter(|w| w.letters().windows(2).all(|p| p[0] <= p[1]))
        .collect()
}

/// Moment transform `E(exp(X))` up to level `N`, from pair partitions. The
/// coefficient of a multiset with multiplicities `m_i` is `E(Π X) / Π m_i!`.
pub fn isserlis_moments<S: Scalar>(g: &GaussianSpec<S>, level: usize) -> SymSeries<S> {
    let d = g.dim();
    let mut terms = Vec::new();
    for k in 0..=level {
        for w in multisets(d, k) {
            let idx: Vec<usize> = w.letters().iter().map(|&c| c as usize - 1).collect();
            let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
            for &i in &idx {
                *mult.entry(i).or_insert(0) += 1;
            }
            let norm = mult
                .values()
                .fold(S::one(), |acc, &m| acc * factorial::<S>(m));
            terms.push((w, gaussian_moment(g, &idx) / norm));
        }
    }
    SymSeries::from_terms(d, level, terms).expect("letters within dimension")
}

/// A matrix placed at level two: `Σ a_ij e_i e_j`.
pub fn matrix_tensor<S: Scalar>(a: &[Vec<S>], level: usize) -> TensorSeries<S> {
    let d = a.len();
    let mut t = TensorSeries::zero(d, level);
    if level >= 2 {
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                t.add_term(Word::from([i as u16 + 1, j as u16 + 1]), x.clone());
            }
        }
    }
    t
}

/// Expected signature `exp(b + a/2)` of Brownian motion with drift `b` and
/// covariance `a`, with `a` kept as a level-two tensor.
pub fn brownian_expected_signature<S: Scalar>(
    b: &[S],
    a: &[Vec<S>],
    level: usize,
) -> Result<TensorSeries<S>> {
    if b.is_empty() {
        return Err(Error::InvalidArgument("dimension must be >= 1".into()));
    }
    check_square(a, b.len())?;
    let half = S::from_ratio(1, 2);
    TensorSeries::from_vector(level, b)
        .add(&matrix_tensor(a, level).scale(&half))?
        .exp()
}

/// Signature cumulant of two concatenated independent centred Brownian
/// paths: `log(exp(a1/2) ⊗ exp(a2/2))`.
pub fn concat_brownian_cumulant<S: Scalar>(
    a1: &[Vec<S>],
    a2: &[Vec<S>],
    level: usize,
) -> Result<TensorSeries<S>> {
    let d = a1.len();
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be >= 1".into()));
    }
    check_square(a1, d)?;
    check_square(a2, d)?;
    if level < 2 {
        return Err(Error::InvalidArgument(
            "truncation level must be >= 2".into(),
        ));
    }
    let half = S::from_ratio(1, 2);
    let x1 = matrix_tensor(a1, level).scale(&half).exp()?;
    let x2 = matrix_tensor(a2, level).scale(&half).exp()?;
    x1.mul(&x2)?.log()
}
