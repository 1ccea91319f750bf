//! Exact rational arithmetic for dimension exponents.
//!
//! Every value is kept in lowest terms with a positive denominator, so
//! equality is structural and hashing is consistent. All arithmetic is
//! integer-exact; nothing here ever touches floating point except the
//! explicit [`Rational::to_f64`] conversion.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("malformed rational `{0}`: expected `p` or `p/q`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// An exact rational number `num/den` in lowest terms, `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    // Invariant: den > 0 and gcd(|num|, den) == 1.
    den: i128,
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den == 0`; a zero denominator is a programming error on
    /// this side of the parse boundary.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational denominator must be non-zero");
        Rational::reduce(num as i128, den as i128)
    }

    fn reduce(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::ZERO;
        }
        let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(n, d);
        Rational {
            num: sign * (n / g) as i128,
            den: (d / g) as i128,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        assert!(self.num != 0, "cannot invert zero");
        Rational::reduce(self.den, self.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational {
            num: n as i128,
            den: 1,
        }
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from(n as i64)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::reduce(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::reduce(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = gcd(self.num.unsigned_abs(), rhs.den.unsigned_abs()).max(1);
        let g2 = gcd(rhs.num.unsigned_abs(), self.den.unsigned_abs()).max(1);
        Rational::reduce(
            (self.num / g1 as i128) * (rhs.num / g2 as i128),
            (self.den / g2 as i128) * (rhs.den / g1 as i128),
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.recip()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        *self = *self * rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    /// Parses `p` or `p/q` with an optional leading sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RationalError::Malformed(s.to_string()));
        }
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: i64 = num_s
            .parse()
            .map_err(|_| RationalError::Malformed(s.to_string()))?;
        let den: i64 = match den_s {
            Some(d) => d
                .parse()
                .map_err(|_| RationalError::Malformed(s.to_string()))?,
            None => 1,
        };
        if den == 0 {
            return Err(RationalError::ZeroDenominator(s.to_string()));
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-3, -6), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(0, 5), Rational::ZERO);
        assert_eq!(r(3, 2).denominator(), 2);
        assert!(r(-3, 2).is_negative());
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(r(1, 3) + r(1, 6), r(1, 2));
        assert_eq!(r(1, 2) - r(1, 3), r(1, 6));
        assert_eq!(r(3, 2) * r(1, 2), r(3, 4));
        assert_eq!(r(3, 2) / r(3, 4), r(2, 1));
        assert_eq!(-r(3, 2), r(-3, 2));
        assert_eq!(r(1, 2).recip(), r(2, 1));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), r(3, 2));
        assert_eq!("-1".parse::<Rational>().unwrap(), r(-1, 1));
        assert_eq!("-3/2".parse::<Rational>().unwrap(), r(-3, 2));
        assert_eq!(" 1/2 ".parse::<Rational>().unwrap(), r(1, 2));
        assert_eq!(r(-3, 2).to_string(), "-3/2");
        assert_eq!(r(4, 2).to_string(), "2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("a/2".parse::<Rational>().is_err());
        assert!("1//2".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_follows_value() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(1, 3));
        assert!(r(2, 4) == r(1, 2));
    }

    proptest! {
        #[test]
        fn roundtrip_parse(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = r(n, d);
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(x, back);
        }

        #[test]
        fn field_laws(a in -100i64..100, b in 1i64..100, c in -100i64..100, d in 1i64..100) {
            let x = r(a, b);
            let y = r(c, d);
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x + y) - y, x);
            if !y.is_zero() {
                prop_assert_eq!((x / y) * y, x);
            }
            prop_assert_eq!(x * (y + Rational::ONE), x * y + x);
        }
    }
}
