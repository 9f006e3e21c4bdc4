//! Numeric oracle: left-point Euler discretisation of `dS = S ⊗ dγ`.

use super::PiecewiseLinearPath;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::TensorSeries;

/// Float path given by sample points, linear in between.
#[derive(Clone, PartialEq, Debug)]
pub struct SampledPath {
    dim: usize,
    samples: Vec<Vec<f64>>,
}

impl SampledPath {
    pub fn new(dim: usize, samples: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("path dimension must be >= 1".into()));
        }
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(
                "a sampled path needs at least two samples".into(),
            ));
        }
        if let Some(s) = samples.iter().find(|s| s.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: s.len(),
            });
        }
        Ok(SampledPath { dim, samples })
    }

    /// Vertices of a piecewise-linear path started at the origin. The empty
    /// path becomes a constant path with two equal samples.
    pub fn from_piecewise<S: Scalar>(path: &PiecewiseLinearPath<S>) -> Self {
        let mut pt = vec![0.0; path.dim()];
        let mut samples = vec![pt.clone()];
        for p in path.pieces() {
            for (x, y) in pt.iter_mut().zip(p) {
                *x += y.to_f64();
            }
            samples.push(pt.clone());
        }
        if samples.len() == 1 {
            samples.push(pt);
        }
        SampledPath {
            dim: path.dim(),
            samples,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    /// Runs `S ← S ⊗ (1 + Δγ)` over `steps` equal sub-steps of every sample
    /// interval. First-order accurate in `1/steps`.
    pub fn euler_signature(&self, level: usize, steps: usize) -> Result<TensorSeries<f64>> {
        if steps == 0 {
            return Err(Error::InvalidArgument("steps must be >= 1".into()));
        }
        let mut s = TensorSeries::<f64>::one(self.dim, level);
        for w in self.samples.windows(2) {
            let delta: Vec<f64> = w[1]
                .iter()
                .zip(&w[0])
                .map(|(b, a)| (b - a) / steps as f64)
                .collect();
            for _ in 0..steps {
                s = s.mul_one_plus_vector(&delta);
            }
        }
        Ok(s)
    }
}

/// Free-function spelling of [`SampledPath::euler_signature`].
pub fn signature_numeric_oracle(
    path: &SampledPath,
    level: usize,
    steps: usize,
) -> Result<TensorSeries<f64>> {
    path.euler_signature(level, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Word;

    #[test]
    fn constant_path_is_exactly_one() {
        let p = SampledPath::new(2, vec![vec![1.0, 2.0], vec![1.0, 2.0], vec![1.0, 2.0]]).unwrap();
        assert_eq!(p.euler_signature(4, 100).unwrap(), TensorSeries::one(2, 4));
    }

    #[test]
    fn straight_line_error_is_first_order() {
        let p = SampledPath::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.5]]).unwrap();
        let exact = TensorSeries::<f64>::from_vector(3, &[1.0, 0.5])
            .exp()
            .unwrap();
        for steps in [10, 100, 1000] {
            let approx = p.euler_signature(3, steps).unwrap();
            let err = approx
                .sub(&exact)
                .unwrap()
                .terms()
                .map(|(_, c)| c.abs())
                .fold(0.0, f64::max);
            assert!(err <= 2.0 / steps as f64, "steps={steps} err={err}");
        }
        // (1 + a/n)^n at level two: C(n,2)/n^2 = (1 - 1/n)/2.
        let approx = p.euler_signature(2, 10).unwrap();
        assert!((approx.coeff(&Word::from([1, 1])) - 0.45).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SampledPath::new(2, vec![vec![0.0, 0.0]]).is_err());
        assert!(SampledPath::new(2, vec![vec![0.0, 0.0], vec![1.0]]).is_err());
        let p = SampledPath::new(1, vec![vec![0.0], vec![1.0]]).unwrap();
        assert!(p.euler_signature(2, 0).is_err());
    }
}
