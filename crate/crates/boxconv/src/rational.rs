//! Exact rational coefficients.
//!
//! Everything in this crate computes over arbitrary-precision rationals in
//! canonical reduced form (positive denominator). The representation is kept
//! behind this module so a different commutative coefficient ring could be
//! substituted without touching the combinatorics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::Ratio<BigInt>;

/// Rational from an integer numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}
