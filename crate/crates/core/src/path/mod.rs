//! Piecewise-linear paths.
//!
//! A path is stored as its list of piece vectors `v1, ..., vm`. Translation
//! and parametrisation do not affect the signature, so this is all the data
//! the signature sees. The signature is Chen's product of the segment
//! exponentials: `Sig = exp(v1) ⊗ ... ⊗ exp(vm)`.

mod closed_form;
mod oracle;

pub use oracle::{signature_numeric_oracle, SampledPath};

use crate::error::{Error, Result};
use crate::lie::LiePolynomial;
use crate::scalar::{factorial, Rational, Scalar};
use crate::tensor::{TensorSeries, Word};

#[derive(Clone, PartialEq, Debug)]
pub struct PiecewiseLinearPath<S = Rational> {
    dim: usize,
    pieces: Vec<Vec<S>>,
}

impl<S: Scalar> PiecewiseLinearPath<S> {
    pub fn new(dim: usize, pieces: Vec<Vec<S>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("path dimension must be >= 1".into()));
        }
        if let Some(p) = pieces.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: p.len(),
            });
        }
        Ok(PiecewiseLinearPath { dim, pieces })
    }

    /// The constant path.
    pub fn empty(dim: usize) -> Self {
        PiecewiseLinearPath {
            dim,
            pieces: Vec::new(),
        }
    }

    /// Path through the given points; only their successive differences
    /// matter.
    pub fn from_points(points: &[Vec<S>]) -> Result<Self> {
        let dim = points.first().map(Vec::len).ok_or(Error::EmptyInput)?;
        let pieces = points
            .windows(2)
            .map(|w| {
                if w[1].len() != dim || w[0].len() != dim {
                    return Err(Error::DimensionMismatch {
                        left: dim,
                        right: w[1].len(),
                    });
                }
                Ok(w[1]
                    .iter()
                    .zip(&w[0])
                    .map(|(b, a)| b.clone() - a.clone())
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, pieces)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Vec<S>] {
        &self.pieces
    }

    pub fn num_pieces(&self) -> usize {
        self.pieces.len()
    }

    /// Total increment `γ(t1) - γ(t0)`.
    pub fn chord(&self) -> Vec<S> {
        let mut c = vec![S::zero(); self.dim];
        for p in &self.pieces {
            for (x, y) in c.iter_mut().zip(p) {
                x.add_assign_ref(y);
            }
        }
        c
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        Ok(PiecewiseLinearPath {
            dim: self.dim,
            pieces,
        })
    }

    /// The same trace run backwards: `[-vm, ..., -v1]`.
    pub fn reversed(&self) -> Self {
        PiecewiseLinearPath {
            dim: self.dim,
            pieces: self
                .pieces
                .iter()
                .rev()
                .map(|p| p.iter().map(|x| -x.clone()).collect())
                .collect(),
        }
    }

    pub fn signature(&self, level: usize) -> TensorSeries<S> {
        self.pieces
            .iter()
            .fold(TensorSeries::one(self.dim, level), |acc, v| {
                acc.mul(&segment_signature(v, level))
                    .expect("pieces share the path dimension")
            })
    }

    /// `log(Sig)` in the tensor basis.
    pub fn log_signature_tensor(&self, level: usize) -> TensorSeries<S> {
        self.signature(level)
            .log()
            .expect("signatures have constant term 1")
    }

    /// `log(Sig)` in Lyndon coordinates.
    pub fn log_signature(&self, level: usize) -> Result<LiePolynomial<S>> {
        LiePolynomial::from_tensor(&self.log_signature_tensor(level))
    }

    /// Removes zero pieces and merges consecutive collinear pieces until
    /// neither applies. The signature is unchanged.
    pub fn reduce(&self) -> Self {
        // A stack pass reaches the fixpoint: a merged piece is parallel to
        // the piece it replaced, so it can only interact with the new top
        // after a full cancellation.
        let mut out: Vec<Vec<S>> = Vec::with_capacity(self.pieces.len());
        for p in &self.pieces {
            if is_zero_vector(p) {
                continue;
            }
            match out.last_mut() {
                Some(top) if collinear(top, p) => {
                    for (x, y) in top.iter_mut().zip(p) {
                        x.add_assign_ref(y);
                    }
                    if is_zero_vector(top) {
                        out.pop();
                    }
                }
                _ => out.push(p.clone()),
            }
        }
        PiecewiseLinearPath {
            dim: self.dim,
            pieces: out,
        }
    }

    /// No zero piece and no two consecutive collinear pieces.
    pub fn is_reduced(&self) -> bool {
        self.pieces.iter().all(|p| !is_zero_vector(p))
            && self.pieces.windows(2).all(|w| !collinear(&w[0], &w[1]))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PiecewiseLinearPath<T> {
        PiecewiseLinearPath {
            dim: self.dim,
            pieces: self
                .pieces
                .iter()
                .map(|p| p.iter().map(&f).collect())
                .collect(),
        }
    }
}

fn is_zero_vector<S: Scalar>(v: &[S]) -> bool {
    let scale = v.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
    v.iter().all(|x| x.is_negligible(scale))
}

/// Two vectors are collinear when every 2×2 minor `u_i v_j - u_j v_i`
/// vanishes. A zero vector is collinear with everything.
pub fn collinear<S: Scalar>(u: &[S], v: &[S]) -> bool {
    let scale = u
        .iter()
        .chain(v)
        .map(|x| x.to_f64().abs())
        .fold(0.0, f64::max);
    (0..u.len()).all(|i| {
        (i + 1..u.len())
            .all(|j| (u[i].mul_ref(&v[j]) - u[j].mul_ref(&v[i])).is_negligible(scale * scale))
    })
}

/// Signature of the straight segment with increment `v`: `exp(v)`, built
/// level by level as `v^{⊗k} / k!`.
pub fn segment_signature<S: Scalar>(v: &[S], level: usize) -> TensorSeries<S> {
    let dim = v.len();
    let mut out = TensorSeries::one(dim, level);
    let mut power: Vec<(Word, S)> = vec![(Word::empty(), S::one())];
    for k in 1..=level {
        power = power
            .iter()
            .flat_map(|(w, c)| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(move |(i, x)| (w.concat(&Word::letter(i as u16 + 1)), c.mul_ref(x)))
            })
            .collect();
        let inv = S::one() / factorial::<S>(k);
        for (w, c) in &power {
            out.add_term(w.clone(), c.mul_ref(&inv));
        }
    }
    out
}

/// Signature `exp(ℓ)` of the pure rough path `t ↦ exp(tℓ)`.
pub fn pure_rough_signature<S: Scalar>(
    l: &LiePolynomial<S>,
    level: usize,
) -> Result<TensorSeries<S>> {
    let degree = l.degree().unwrap_or(0);
    if degree > level {
        return Err(Error::InvalidArgument(format!(
            "truncation level {level} is below the degree {degree} of the Lie polynomial"
        )));
    }
    let t = l.to_tensor();
    let t = if t.level() == level {
        t
    } else {
        t.truncate(level)
    };
    t.exp()
}
