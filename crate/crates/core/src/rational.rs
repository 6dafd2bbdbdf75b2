//! Exact rational numbers used for edge lengths.
//!
//! A thin newtype over `num_rational::Ratio<i64>` that pins the textual
//! format used throughout the crate and the CLI: an integer renders as `"n"`,
//! everything else as the reduced fraction `"p/q"` with `q > 0`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// An exact rational number with `i64` numerator and denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Builds `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    pub fn one() -> Self {
        Rational(Ratio::one())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact half of this value.
    pub fn half(&self) -> Self {
        Rational(self.0 / 2)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Error produced when parsing a rational from text fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an integer \"n\" or fraction \"p/q\" with nonzero q")
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"n"` or `"p/q"` (optional leading `-` on `p` or `n`;
    /// `q` must be a positive integer). No whitespace, no decimals.
    fn from_str(s: &str) -> Result<Self, ParseRationalError> {
        let parse_int = |t: &str| -> Result<i64, ParseRationalError> {
            if t.is_empty() {
                return Err(ParseRationalError);
            }
            t.parse::<i64>().map_err(|_| ParseRationalError)
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((p, q)) => {
                let p = parse_int(p)?;
                let q = parse_int(q)?;
                if q <= 0 {
                    return Err(ParseRationalError);
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_pins_the_format() {
        assert_eq!(Rational::from_integer(3).to_string(), "3");
        assert_eq!(Rational::new(1, 2).to_string(), "1/2");
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::new(-3, 6).to_string(), "-1/2");
        assert_eq!(Rational::new(4, 2).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "7", "-4", "1/2", "22/7", "-5/3"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // Non-canonical input parses to the reduced value.
        assert_eq!("6/4".parse::<Rational>().unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1.5", "1/0", "1/-2", "a", "1/", "/2", " 1", "1 /2"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rational::new(1, 3);
        assert_eq!(third + third + third, Rational::one());
        assert_eq!(Rational::new(1, 2).half(), Rational::new(1, 4));
        assert_eq!(Rational::new(3, 2) * Rational::new(2, 3), Rational::one());
        assert_eq!(Rational::one() - Rational::new(1, 2), Rational::new(1, 2));
        let sum: Rational = [Rational::new(1, 2); 4].into_iter().sum();
        assert_eq!(sum, Rational::from_integer(2));
        assert!(Rational::new(1, 2).is_positive());
        assert!(!Rational::zero().is_positive());
        assert!(!(-Rational::one()).is_positive());
    }
}
