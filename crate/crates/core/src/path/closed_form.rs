//! Explicit level-two and level-three log-signatures of a piecewise-linear
//! path, written directly in the pieces. They are kept independent of the
//! exp/log machinery so each can check the other.

use super::PiecewiseLinearPath;
use crate::scalar::Scalar;
use crate::tensor::{TensorSeries, Word};

/// Adds `c · v_a ⊗ v_b ⊗ ...` (one vector per slot) into `out`.
fn add_outer<S: Scalar>(out: &mut TensorSeries<S>, c: &S, vs: &[&[S]]) {
    let dim = out.dim();
    for w in Word::all_of_length(dim, vs.len()) {
        let mut x = c.clone();
        for (v, &letter) in vs.iter().zip(w.letters()) {
            x = x.mul_ref(&v[letter as usize - 1]);
            if x.is_zero() {
                break;
            }
        }
        out.add_term(w, x);
    }
}

impl<S: Scalar> PiecewiseLinearPath<S> {
    /// `½ Σ_{i<j} (v_i ⊗ v_j − v_j ⊗ v_i)`, as a level-2 series.
    pub fn level2_closed_form(&self) -> TensorSeries<S> {
        let mut out = TensorSeries::zero(self.dim, 2);
        let half = S::from_ratio(1, 2);
        let v = &self.pieces;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                add_outer(&mut out, &half, &[&v[i], &v[j]]);
                add_outer(&mut out, &-half.clone(), &[&v[j], &v[i]]);
            }
        }
        out
    }

    /// Level-three log-signature as a level-3 series:
    ///
    /// `1/12 Σ_{i≠j} (v_i⊗v_i⊗v_j + v_i⊗v_j⊗v_j) + 1/3 Σ_{S1} v_i⊗v_j⊗v_k
    ///  − 1/6 Σ_{S2} v_i⊗v_j⊗v_k`
    ///
    /// with `S1` the monotone triples (`i<j<k` or `i>j>k`) and `S2` the
    /// zigzag triples (`i<j>k` or `i>j<k`).
    pub fn level3_closed_form(&self) -> TensorSeries<S> {
        let mut out = TensorSeries::zero(self.dim, 3);
        let twelfth = S::from_ratio(1, 12);
        let third = S::from_ratio(1, 3);
        let minus_sixth = S::from_ratio(-1, 6);
        let v = &self.pieces;
        let m = v.len();
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    add_outer(&mut out, &twelfth, &[&v[i], &v[i], &v[j]]);
                    add_outer(&mut out, &twelfth, &[&v[i], &v[j], &v[j]]);
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let monotone = (i < j && j < k) || (i > j && j > k);
                    let zigzag = (i < j && j > k) || (i > j && j < k);
                    if monotone {
                        add_outer(&mut out, &third, &[&v[i], &v[j], &v[k]]);
                    } else if zigzag {
                        add_outer(&mut out, &minus_sixth, &[&v[i], &v[j], &v[k]]);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::bch;
    use crate::scalar::{rat, Rational};

    type P = PiecewiseLinearPath<Rational>;
    type T = TensorSeries<Rational>;

    fn path(pieces: &[[Rational; 2]]) -> P {
        P::new(2, pieces.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_piece_has_no_higher_terms() {
        let p = path(&[[rat(3, 1), rat(-2, 1)]]);
        assert!(p.level2_closed_form().is_zero());
        assert!(p.level3_closed_form().is_zero());
    }

    #[test]
    fn two_letters_at_level_two() {
        let p = path(&[[rat(1, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]]);
        let expect = T::from_terms(
            2,
            2,
            [
                (Word::from([1, 2]), rat(1, 2)),
                (Word::from([2, 1]), rat(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(p.level2_closed_form(), expect);
    }

    #[test]
    fn three_piece_family_has_zero_area() {
        for a in [rat(-7, 2), rat(0, 1), rat(5, 1), rat(11, 3)] {
            let p = path(&[
                [rat(1, 1), rat(1, 1)],
                [rat(1, 1), rat(-1, 1)],
                [a, rat(1, 1)],
            ]);
            assert!(p.level2_closed_form().is_zero());
        }
    }

    #[test]
    fn two_pieces_at_level_three_match_bch() {
        let a = [rat(2, 1), rat(-1, 3)];
        let b = [rat(1, 2), rat(5, 1)];
        let p = path(&[a.clone(), b.clone()]);
        let c = bch(&T::from_vector(3, &a), &T::from_vector(3, &b)).unwrap();
        assert_eq!(p.level3_closed_form(), c.project(3));
    }

    #[test]
    fn level_three_vanishes_on_the_constraint() {
        let v1 = [rat(2, 1), rat(1, 3)];
        let v2 = [rat(-1, 2), rat(4, 1)];
        let v3 = [
            -v1[0].clone() - rat(3, 1) * &v2[0],
            -v1[1].clone() - rat(3, 1) * &v2[1],
        ];
        let p = path(&[v1, v2, v3]);
        assert!(p.level3_closed_form().is_zero());
        assert!(p.log_signature_tensor(3).is_level_zero(3));
        assert!(p.is_reduced());
    }
}
