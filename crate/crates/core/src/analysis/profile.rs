use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::path::PiecewiseLinearPath;
use crate::scalar::Scalar;
use crate::tensor::TensorSeries;

/// Finite-level growth profile `((k/p)! ‖π_k T‖₁)^{p/k}` for `k = 1..=N`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct LpProfile {
    pub p: f64,
    /// `values[k - 1]` is the level-`k` entry.
    pub values: Vec<f64>,
}

impl LpProfile {
    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }
}

/// ℓ1 norm of the level-`k` coordinates.
pub fn level_l1_norm<S: Scalar>(t: &TensorSeries<S>, k: usize) -> S {
    t.level_terms(k)
        .values()
        .fold(S::zero(), |acc, c| acc + c.abs())
}

pub fn lp_profile<S: Scalar>(t: &TensorSeries<S>, p: f64) -> Result<LpProfile> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "p must be a finite value >= 1, got {p}"
        )));
    }
    let values = (1..=t.level())
        .map(|k| {
            let norm = level_l1_norm(t, k).to_f64();
            if norm == 0.0 {
                return 0.0;
            }
            let k = k as f64;
            ((p / k) * (ln_gamma(k / p + 1.0) + norm.ln())).exp()
        })
        .collect();
    Ok(LpProfile { p, values })
}

/// Euclidean length `Σ ‖v_i‖₂` of a piecewise-linear path.
pub fn path_length<S: Scalar>(path: &PiecewiseLinearPath<S>) -> f64 {
    path.pieces()
        .iter()
        .map(|v| v.iter().map(|x| x.to_f64().powi(2)).sum::<f64>().sqrt())
        .sum()
}

/// Length `Σ ‖v_i‖₁` measured in the ℓ1 norm, exact on rationals. This is
/// the 1-variation that matches the ℓ1 tensor norm used by [`lp_profile`].
pub fn path_length_l1<S: Scalar>(path: &PiecewiseLinearPath<S>) -> S {
    path.pieces()
        .iter()
        .flat_map(|v| v.iter())
        .fold(S::zero(), |acc, x| acc + x.abs())
}
