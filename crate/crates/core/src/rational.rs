use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A non-negative fraction in lowest terms, or the distinguished value `∞`
/// (stored as `1/0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigUint,
    den: BigUint,
}

impl Rational {
    /// Reduces `num/den`. A zero denominator yields `∞`.
    ///
    /// Panics on `0/0`.
    pub fn new(num: BigUint, den: BigUint) -> Rational {
        assert!(!(num.is_zero() && den.is_zero()), "0/0 is not a rational");
        if den.is_zero() {
            return Rational::infinity();
        }
        let g = num.gcd(&den);
        Rational {
            num: num / &g,
            den: den / g,
        }
    }

    pub fn from_u64(num: u64, den: u64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    pub fn one() -> Rational {
        Rational {
            num: BigUint::one(),
            den: BigUint::one(),
        }
    }

    pub fn infinity() -> Rational {
        Rational {
            num: BigUint::one(),
            den: BigUint::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
