//! Scalar abstraction for the weight-lattice arithmetic.
//!
//! Everything downstream computes with exact rationals. The trait keeps the
//! kernel agnostic about the concrete representation, so the same code runs
//! on machine-word rationals ([`Rat`]) or arbitrary-precision ones
//! ([`BigRat`]). Floating point types cannot implement [`Scalar`]: exact
//! equality, total order and hashing of weights are load-bearing.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Exact rational scalar.
pub trait Scalar:
    Num + Signed + Ord + Hash + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// Exact integer value, or `None` if the scalar is not an integer.
    fn to_int(&self) -> Option<i64>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_int(&self) -> bool {
        self.to_int().is_some()
    }

    /// True iff `2 * self` is an integer.
    fn is_half_int(&self) -> bool {
        (self.clone() + self.clone()).is_int()
    }
}

/// Machine-word rationals; the default scalar throughout the crate.
pub type Rat = num_rational::Rational64;

/// Arbitrary-precision rationals.
pub type BigRat = num_rational::BigRational;

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            Some(*self.numer())
        } else {
            None
        }
    }
}

impl Scalar for BigRat {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Renders a scalar the way the fixture files store it: `p` or `p/q`.
pub fn display_ratio<S: Scalar>(x: &S) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_round_trip() {
        assert_eq!(Rat::from_int(-7).to_int(), Some(-7));
        assert_eq!(Rat::from_ratio(2, 3).to_int(), None);
        assert!(Rat::from_ratio(-1, 2).is_half_int());
        assert!(!Rat::from_ratio(1, 3).is_half_int());
        assert_eq!(BigRat::from_ratio(4, 2).to_int(), Some(2));
    }
}
