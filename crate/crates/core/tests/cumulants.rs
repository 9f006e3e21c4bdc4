use pathsig::analysis::{random_vector, trial_rng};
use pathsig::cumulants::{
    brownian_expected_signature, concat_brownian_cumulant, gaussian_cumulant, isserlis_moments,
    sym_exp, GaussianSpec, SymSeries,
};
use pathsig::{Rational, Word};
use rand::Rng;

fn random_symmetric(rng: &mut impl Rng, d: usize) -> Vec<Vec<Rational>> {
    let r: Vec<Vec<Rational>> = (0..d).map(|_| random_vector(rng, d)).collect();
    (0..d)
        .map(|i| (0..d).map(|j| r[i.min(j)][i.max(j)].clone()).collect())
        .collect()
}

fn random_gaussian(seed: u64, i: u64) -> GaussianSpec {
    let mut rng = trial_rng(seed, i);
    let d = rng.random_range(1..=3);
    GaussianSpec::new(random_vector(&mut rng, d), random_symmetric(&mut rng, d)).unwrap()
}

#[test]
fn oracle_equivalence() {
    for i in 0..50 {
        let g = random_gaussian(1, i);
        assert_eq!(
            isserlis_moments(&g, 4),
            sym_exp(&gaussian_cumulant(&g, 4)).unwrap(),
            "sample {i}"
        );
    }
}

#[test]
fn expected_signature_abelianizes_to_moments() {
    for i in 0..20 {
        let g = random_gaussian(2, i);
        let s = brownian_expected_signature(g.mean(), g.cov(), 4).unwrap();
        assert_eq!(
            SymSeries::from_tensor(&s),
            isserlis_moments(&g, 4),
            "sample {i}"
        );
    }
}

#[test]
fn odd_moments_vanish_when_centred() {
    let mut rng = trial_rng(3, 0);
    let g = GaussianSpec::new(vec![Rational::default(); 3], random_symmetric(&mut rng, 3)).unwrap();
    let m = isserlis_moments(&g, 5);
    for k in [1, 3, 5] {
        assert!(m.level_terms(k).is_empty(), "level {k}");
    }
}

#[test]
fn concatenation_cumulant_is_not_polynomial() {
    for i in 0..10 {
        let mut rng = trial_rng(4, i);
        let (a1, a2) = (random_symmetric(&mut rng, 2), random_symmetric(&mut rng, 2));
        let k = concat_brownian_cumulant(&a1, &a2, 6).unwrap();
        // Symmetric 2x2 matrices commute only when one is a combination of
        // the identity and the other.
        let commute = (0..2).all(|r| {
            (0..2).all(|c| {
                let ab: Rational = (0..2).map(|j| &a1[r][j] * &a2[j][c]).sum();
                let ba: Rational = (0..2).map(|j| &a2[r][j] * &a1[j][c]).sum();
                ab == ba
            })
        });
        let level4_nonzero = !k.is_level_zero(4);
        assert!(commute || level4_nonzero, "sample {i}");
        assert!(k.is_level_zero(1) && k.is_level_zero(3) && k.is_level_zero(5));
        assert!(
            k.coeff(&Word::from([1, 1]))
                == (&a1[0][0] + &a2[0][0]) / Rational::from_integer(2.into())
        );
    }
}
