//! Coefficient fields.
//!
//! Every algebraic routine in the crate is generic over [`Scalar`]. Two
//! backends are provided: [`Rational`] (arbitrary precision, exact) and `f64`.
//! Exact rationals are the canonical choice; identities are checked with zero
//! tolerance there. The float backend treats a coefficient `c` as zero when
//! `|c| <= 1e-9 * (1 + scale)`, where `scale` is the largest absolute
//! coefficient among the operands being compared.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Relative zero threshold of the float backend.
pub const FLOAT_ZERO_TOL: f64 = 1e-9;

/// Shorthand for the rational `num / den`.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub trait Scalar:
    Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// `true` for backends where equality is exact.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Zero test relative to `scale`; exact backends ignore `scale`.
    fn is_negligible(&self, scale: f64) -> bool;

    fn parse_scalar(s: &str) -> Result<Self>;

    /// String form used by the JSON formats.
    fn render(&self) -> String;

    fn mul_ref(&self, other: &Self) -> Self;

    fn add_assign_ref(&mut self, other: &Self);

    fn sub_assign_ref(&mut self, other: &Self);
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(num, den))
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_ZERO_TOL * (1.0 + scale)
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
            let d: f64 = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
            return Ok(n / d);
        }
        s.parse()
            .map_err(|_| Error::Parse(format!("bad number {s:?}")))
    }

    fn render(&self) -> String {
        // `{:?}` keeps a decimal point ("1.0") and round-trips exactly.
        format!("{self:?}")
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

/// Converts an exact rational into the target backend.
pub fn convert<S: Scalar>(q: &Rational) -> S {
    if S::EXACT {
        // Only `Rational` is exact; round-trip through its string form.
        S::parse_scalar(&q.render()).expect("rational renders parseably")
    } else {
        S::parse_scalar(&Scalar::to_f64(q).to_string()).unwrap_or_else(|_| S::zero())
    }
}

/// `n!` as a scalar.
pub fn factorial<S: Scalar>(n: usize) -> S {
    (1..=n as i64).fold(S::one(), |acc, k| acc * S::from_i64(k))
}

pub(crate) fn is_one<S: Scalar>(x: &S) -> bool {
    *x == S::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_render_parse() {
        assert_eq!(rat(1, 2).render(), "1/2");
        assert_eq!(rat(4, 2).render(), "2");
        assert_eq!(rat(-3, 9).render(), "-1/3");
        assert_eq!(Rational::parse_scalar("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(Rational::parse_scalar("7").unwrap(), rat(7, 1));
        assert!(Rational::parse_scalar("1/0").is_err());
        assert!(Rational::parse_scalar("0.5").is_err());
    }

    #[test]
    fn float_render_parse() {
        assert_eq!(1.0f64.render(), "1.0");
        assert_eq!(f64::parse_scalar("0.25").unwrap(), 0.25);
        assert_eq!(f64::parse_scalar("1/4").unwrap(), 0.25);
    }

    #[test]
    fn float_zero_rule_is_scale_relative() {
        assert!(1e-10f64.is_negligible(0.0));
        assert!(!1e-8f64.is_negligible(0.0));
        assert!(1e-8f64.is_negligible(100.0));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial::<Rational>(5), rat(120, 1));
        assert_eq!(factorial::<f64>(0), 1.0);
    }

    #[test]
    fn convert_to_float() {
        let x: f64 = convert(&rat(1, 4));
        assert_eq!(x, 0.25);
        let q: Rational = convert(&rat(-2, 3));
        assert_eq!(q, rat(-2, 3));
    }
}
