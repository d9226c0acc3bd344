use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Exact rational number.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality is numeric equality and the textual form is canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_ratio(numerator: i64, denominator: i64) -> Result<Self, Error> {
        if denominator == 0 {
            return Err(Error::ParseScalar {
                text: format!("{numerator}/{denominator}"),
                reason: "zero denominator",
            });
        }
        Ok(Scalar(BigRational::new(numerator.into(), denominator.into())))
    }

    pub fn from_bigints(numerator: BigInt, denominator: BigInt) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::ParseScalar {
                text: format!("{numerator}/0"),
                reason: "zero denominator",
            });
        }
        Ok(Scalar(BigRational::new(numerator, denominator)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    /// Exact division, `None` when the divisor is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub(crate) fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_integer(value: BigInt) -> Self {
        Scalar(BigRational::from_integer(value))
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar(BigRational::from_integer(value.into()))
    }
}

impl From<i32> for Scalar {
    fn from(value: i32) -> Self {
        Scalar::from(i64::from(value))
    }
}

impl From<u32> for Scalar {
    fn from(value: u32) -> Self {
        Scalar::from(i64::from(value))
    }
}

impl From<usize> for Scalar {
    fn from(value: usize) -> Self {
        Scalar(BigRational::from_integer(value.into()))
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Scalar(value)
    }
}

fn parse_digits<'a>(text: &'a str, whole: &str) -> Result<&'a str, Error> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseScalar {
            text: whole.to_string(),
            reason: "expected decimal digits",
        });
    }
    Ok(text)
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional leading sign on `p`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        let (negative, body) = match trimmed.as_bytes().first() {
            Some(b'-') => (true, &trimmed[1..]),
            Some(b'+') => (false, &trimmed[1..]),
            _ => (false, trimmed),
        };
        let (num_text, den_text) = match body.split_once('/') {
            Some((n, d)) => (parse_digits(n, trimmed)?, Some(parse_digits(d, trimmed)?)),
            None => (parse_digits(body, trimmed)?, None),
        };
        let mut numerator: BigInt = num_text.parse().expect("digits parse as an integer");
        if negative {
            numerator = -numerator;
        }
        let denominator: BigInt = match den_text {
            Some(d) => d.parse().expect("digits parse as an integer"),
            None => BigInt::one(),
        };
        if denominator.is_zero() {
            return Err(Error::ParseScalar {
                text: trimmed.to_string(),
                reason: "zero denominator",
            });
        }
        Ok(Scalar(BigRational::new(numerator, denominator)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }

        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }

        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division by zero panics, as with the primitive numeric types.
// Use `checked_div` when the divisor may vanish.
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(s("3"), Scalar::from(3));
        assert_eq!(s("-3"), Scalar::from(-3));
        assert_eq!(s("+3"), Scalar::from(3));
        assert_eq!(s("6/4"), Scalar::from_ratio(3, 2).unwrap());
        assert_eq!(s("-6/4").to_string(), "-3/2");
        assert_eq!(s(" 0/7 ").to_string(), "0");
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1 /2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn canonical_output_is_lowest_terms() {
        assert_eq!(s("10/4").to_string(), "5/2");
        assert_eq!(s("-0").to_string(), "0");
        assert_eq!(s("12/3").to_string(), "4");
        assert!(s("12/3").denom().is_one());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = s("1/3");
        let sum = &third + &third + &third;
        assert_eq!(sum, Scalar::one());
        assert_eq!(s("1/2") * s("2/3"), s("1/3"));
        assert_eq!(s("1/2") / s("1/4"), s("2"));
        assert_eq!(s("1/2").checked_div(&Scalar::zero()), None);
        assert_eq!(Scalar::zero().recip(), None);
    }
}
