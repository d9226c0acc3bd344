use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::games::Coalition;
use crate::numerics::{Interval, Scalar};

/// Real payoff vector; entry `i` is the reward of player `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PayoffVector(Vec<Scalar>);

impl PayoffVector {
    pub fn new(values: Vec<Scalar>) -> Self {
        PayoffVector(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn total(&self) -> Scalar {
        self.0.iter().sum()
    }

    /// `Σ_{i ∈ S} x_i`.
    pub fn coalition_sum(&self, coalition: Coalition) -> Scalar {
        coalition.members().map(|i| &self.0[i]).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &PayoffVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn expect_len(&self, players: usize) -> Result<(), Error> {
        if self.len() != players {
            return Err(Error::Dimension {
                what: "payoff vector length",
                expected: players,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for PayoffVector {
    type Output = Scalar;
    fn index(&self, index: usize) -> &Scalar {
        &self.0[index]
    }
}

impl From<Vec<Scalar>> for PayoffVector {
    fn from(values: Vec<Scalar>) -> Self {
        PayoffVector(values)
    }
}

impl FromIterator<Scalar> for PayoffVector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        PayoffVector(iter.into_iter().collect())
    }
}

impl FromStr for PayoffVector {
    type Err = Error;

    /// Comma-separated scalars, optionally wrapped in parentheses.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Scalar>, _>>()
            .map(PayoffVector)
    }
}

impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Vector of interval payoffs. Each component is a valid interval by
/// construction of [`Interval`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntervalPayoffVector(Vec<Interval>);

impl IntervalPayoffVector {
    pub fn new(values: Vec<Interval>) -> Self {
        IntervalPayoffVector(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Interval] {
        &self.0
    }

    pub fn coalition_sum(&self, coalition: Coalition) -> Interval {
        coalition.members().map(|i| &self.0[i]).sum()
    }

    pub fn lower_vector(&self) -> PayoffVector {
        self.0.iter().map(|i| i.lower().clone()).collect()
    }

    pub fn upper_vector(&self) -> PayoffVector {
        self.0.iter().map(|i| i.upper().clone()).collect()
    }

    /// Whether `x_i ∈ I_i` for every component.
    pub fn generates(&self, x: &PayoffVector) -> bool {
        self.len() == x.len() && self.0.iter().zip(x.iter()).all(|(i, v)| i.contains(v))
    }
}

impl Index<usize> for IntervalPayoffVector {
    type Output = Interval;
    fn index(&self, index: usize) -> &Interval {
        &self.0[index]
    }
}

impl FromStr for IntervalPayoffVector {
    type Err = Error;

    /// Intervals separated by whitespace or commas, e.g. `[1, 3/2] [1, 3/2]`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let end = rest.find(']').ok_or_else(|| Error::ParseInterval {
                text: rest.to_string(),
                reason: "missing closing bracket".to_string(),
            })?;
            values.push(rest[..=end].parse()?);
            rest = &rest[end + 1..];
        }
        Ok(IntervalPayoffVector(values))
    }
}

impl fmt::Display for IntervalPayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IntervalPayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
