//! Exact quarter-integer arithmetic.
//!
//! Every adjacency weight of a semigraph is one of `1/4`, `1/2` or a positive
//! integer, so every matrix entry, degree and bound handled by this crate is
//! an integer multiple of `1/4`. [`Quarter`] stores that multiple directly.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;

/// A rational number of the form `p/4` with integer `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quarter(i64);

impl Quarter {
    pub const ZERO: Quarter = Quarter(0);
    pub const ONE: Quarter = Quarter(4);
    pub const HALF: Quarter = Quarter(2);
    pub const QUARTER: Quarter = Quarter(1);

    /// Builds the value `quarters / 4`.
    pub const fn from_quarters(quarters: i64) -> Self {
        Quarter(quarters)
    }

    pub const fn from_int(value: i64) -> Self {
        Quarter(value * 4)
    }

    /// The integer numerator `p` of `p/4`.
    pub const fn quarters(self) -> i64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 4.0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(4))
    }

    /// Numerator and denominator in lowest terms, denominator in `{1, 2, 4}`.
    pub fn reduced(self) -> (i64, i64) {
        let p = self.0;
        if p % 4 == 0 {
            (p / 4, 1)
        } else if p % 2 == 0 {
            (p / 2, 2)
        } else {
            (p, 4)
        }
    }

    pub fn abs(self) -> Self {
        Quarter(self.0.abs())
    }
}

impl fmt::Display for Quarter {
    /// Lowest-terms `p/q`, or a bare integer when `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            (p, 1) => write!(f, "{p}"),
            (p, q) => write!(f, "{p}/{q}"),
        }
    }
}

impl Add for Quarter {
    type Output = Quarter;
    fn add(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 + rhs.0)
    }
}

impl Sub for Quarter {
    type Output = Quarter;
    fn sub(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 - rhs.0)
    }
}

impl Neg for Quarter {
    type Output = Quarter;
    fn neg(self) -> Quarter {
        Quarter(-self.0)
    }
}

impl Mul<i64> for Quarter {
    type Output = Quarter;
    fn mul(self, rhs: i64) -> Quarter {
        Quarter(self.0 * rhs)
    }
}

impl AddAssign for Quarter {
    fn add_assign(&mut self, rhs: Quarter) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Quarter {
    fn sub_assign(&mut self, rhs: Quarter) {
        self.0 -= rhs.0;
    }
}

impl Sum for Quarter {
    fn sum<I: Iterator<Item = Quarter>>(iter: I) -> Quarter {
        iter.fold(Quarter::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Quarter> for Quarter {
    fn sum<I: Iterator<Item = &'a Quarter>>(iter: I) -> Quarter {
        iter.copied().sum()
    }
}
