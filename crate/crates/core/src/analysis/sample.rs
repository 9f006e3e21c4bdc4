use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::path::PiecewiseLinearPath;
use crate::scalar::{rat, Rational};

/// Deterministic generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Rational with numerator in `[-9, 9]` and denominator in `[1, 9]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| random_rational(rng)).collect()
}

/// Arbitrary rational path with `m` pieces; may be non-reduced.
pub fn random_path(rng: &mut impl Rng, m: usize, dim: usize) -> PiecewiseLinearPath {
    let pieces = (0..m).map(|_| random_vector(rng, dim)).collect();
    PiecewiseLinearPath::new(dim, pieces).expect("pieces have the path dimension")
}

/// Reduced rational path with `m` pieces, by rejection sampling.
///
/// # Panics
///
/// Panics for `dim == 1, m >= 2`: every pair of pieces is collinear there.
pub fn random_reduced_path(rng: &mut impl Rng, m: usize, dim: usize) -> PiecewiseLinearPath {
    assert!(
        dim >= 2 || m <= 1,
        "no reduced paths with {m} pieces in one dimension"
    );
    loop {
        let p = random_path(rng, m, dim);
        if p.is_reduced() {
            return p;
        }
    }
}
