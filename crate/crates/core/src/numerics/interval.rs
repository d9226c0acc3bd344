use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Scalar;
use crate::error::Error;

/// Closed interval `[lower, upper]` with exact endpoints, `lower <= upper`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Interval {
    lower: Scalar,
    upper: Scalar,
}

impl Interval {
    pub fn new(lower: Scalar, upper: Scalar) -> Result<Self, Error> {
        if lower > upper {
            return Err(Error::InvertedInterval {
                lower: lower.to_string(),
                upper: upper.to_string(),
            });
        }
        Ok(Interval { lower, upper })
    }

    /// The degenerate interval `[value, value]`.
    pub fn point(value: Scalar) -> Self {
        Interval {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn zero() -> Self {
        Interval::point(Scalar::zero())
    }

    pub fn lower(&self) -> &Scalar {
        &self.lower
    }

    pub fn upper(&self) -> &Scalar {
        &self.upper
    }

    pub fn width(&self) -> Scalar {
        &self.upper - &self.lower
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        &self.lower <= value && value <= &self.upper
    }

    /// `self ⪰ other`: both endpoints at least those of `other`.
    pub fn weakly_better(&self, other: &Interval) -> bool {
        self.lower >= other.lower && self.upper >= other.upper
    }

    /// `self ≻ other`: weakly better and not equal.
    pub fn strictly_better(&self, other: &Interval) -> bool {
        self.weakly_better(other) && self != other
    }

    /// `self ⪯ other`.
    pub fn weakly_worse(&self, other: &Interval) -> bool {
        other.weakly_better(self)
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let products = [
            &self.lower * &rhs.upper,
            &self.upper * &rhs.lower,
            &self.lower * &rhs.lower,
            &self.upper * &rhs.upper,
        ];
        hull(products)
    }

    pub fn div(&self, rhs: &Interval) -> Result<Interval, Error> {
        if rhs.contains(&Scalar::zero()) {
            return Err(Error::DivisionByZero {
                divisor: rhs.to_string(),
            });
        }
        let quotients = [
            &self.lower / &rhs.upper,
            &self.upper / &rhs.lower,
            &self.lower / &rhs.lower,
            &self.upper / &rhs.upper,
        ];
        Ok(hull(quotients))
    }
}

fn hull(values: [Scalar; 4]) -> Interval {
    let lower = values.iter().min().expect("four values").clone();
    let upper = values.iter().max().expect("four values").clone();
    Interval { lower, upper }
}

impl<'b> Add<&'b Interval> for &Interval {
    type Output = Interval;
    fn add(self, rhs: &'b Interval) -> Interval {
        Interval {
            lower: &self.lower + &rhs.lower,
            upper: &self.upper + &rhs.upper,
        }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        &self + &rhs
    }
}

impl<'b> Sub<&'b Interval> for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &'b Interval) -> Interval {
        Interval {
            lower: &self.lower - &rhs.upper,
            upper: &self.upper - &rhs.lower,
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        &self - &rhs
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lower: -&self.upper,
            upper: -&self.lower,
        }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl std::iter::Sum for Interval {
    fn sum<I: Iterator<Item = Interval>>(iter: I) -> Interval {
        iter.fold(Interval::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> std::iter::Sum<&'a Interval> for Interval {
    fn sum<I: Iterator<Item = &'a Interval>>(iter: I) -> Interval {
        iter.fold(Interval::zero(), |acc, x| &acc + x)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Interval {
    type Err = Error;

    /// Parses `[lo, hi]`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::ParseInterval {
                text: trimmed.to_string(),
                reason: "expected the form [lower, upper]".to_string(),
            })?;
        let (lo, hi) = inner.split_once(',').ok_or_else(|| Error::ParseInterval {
            text: trimmed.to_string(),
            reason: "missing comma between endpoints".to_string(),
        })?;
        let lower: Scalar = lo.parse()?;
        let upper: Scalar = hi.parse()?;
        Interval::new(lower, upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(text: &str) -> Interval {
        text.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&iv("[1,3]") + &iv("[1,4]"), iv("[2,7]"));
        assert_eq!(&iv("[0,0]") + &iv("[-1/2,5/3]"), iv("[-1/2,5/3]"));
        assert_eq!(&iv("[1,3]") + &iv("[1,3]"), iv("[2,6]"));
    }

    #[test]
    fn subtraction_examples() {
        assert_eq!(&iv("[2,5]") - &iv("[1,1]"), iv("[1,4]"));
        assert_eq!(&iv("[0,1]") - &iv("[0,1]"), iv("[-1,1]"));
        let x = iv("[2/3, 7/2]");
        let spread = x.width();
        assert_eq!(&x - &x, Interval::new(-spread.clone(), spread).unwrap());
    }

    #[test]
    fn weakly_better_examples() {
        assert!(iv("[2,4]").weakly_better(&iv("[1,3]")));
        assert!(iv("[1,3]").weakly_better(&iv("[1,3]")));
        assert!(!iv("[1,3]").strictly_better(&iv("[1,3]")));
        assert!(iv("[2,4]").strictly_better(&iv("[1,3]")));
        assert!(!iv("[0,5]").weakly_better(&iv("[1,2]")));
        assert!(iv("[1,2]").weakly_worse(&iv("[1,3]")));
    }

    #[test]
    fn multiplication_and_division() {
        assert_eq!(iv("[-1,2]").mul(&iv("[3,4]")), iv("[-4,8]"));
        assert_eq!(iv("[-2,-1]").mul(&iv("[-3,5]")), iv("[-10,6]"));
        assert_eq!(iv("[1,2]").div(&iv("[2,4]")).unwrap(), iv("[1/4,1]"));
        assert!(matches!(
            iv("[1,2]").div(&iv("[-1,1]")),
            Err(Error::DivisionByZero { .. })
        ));
        assert!(iv("[1,2]").div(&iv("[0,1]")).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(iv(" [ 1/2 , 3 ] ").to_string(), "[1/2, 3]");
        assert!(matches!(
            "[3, 2]".parse::<Interval>(),
            Err(Error::InvertedInterval { .. })
        ));
        assert!("1, 2".parse::<Interval>().is_err());
        assert!("[1 2]".parse::<Interval>().is_err());
        assert!("[1, x]".parse::<Interval>().is_err());
    }
}
