//! Game families separating the selection-based classes from the classes
//! defined through the weakly-better order.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::games::IntervalGame;
use crate::numerics::{Interval, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `w(S) = [2|S| - 2, 2|S| - 1]`: selection superadditive, not a
    /// superadditive interval game.
    SelectionSuperadditive,
    /// `w(S) = [0, |S|]`: superadditive (and convex) interval game, not
    /// selection superadditive.
    IntervalSuperadditive,
    /// `w(S) = [2^|S| - 2, 2^|S| - 1]`: selection convex.
    SelectionConvex,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::SelectionSuperadditive,
        FamilyKind::IntervalSuperadditive,
        FamilyKind::SelectionConvex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::SelectionSuperadditive => "sel-superadditive",
            FamilyKind::IntervalSuperadditive => "interval-superadditive",
            FamilyKind::SelectionConvex => "sel-convex",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == text).ok_or_else(|| {
            Error::Family(format!(
                "unknown kind {text:?}; expected sel-superadditive, interval-superadditive or sel-convex"
            ))
        })
    }
}

/// Builds the named family on `players` players. Requires at least two
/// players, since with one player no pair of nonempty disjoint or
/// incomparable coalitions exists and the families separate nothing.
pub fn family(kind: FamilyKind, players: usize) -> Result<IntervalGame, Error> {
    if players < 2 {
        return Err(Error::Family(format!(
            "families need at least 2 players, got {players}"
        )));
    }
    IntervalGame::from_fn(players, |s| {
        let size = s.len() as i64;
        let (lower, upper) = match kind {
            FamilyKind::SelectionSuperadditive => (2 * size - 2, 2 * size - 1),
            FamilyKind::IntervalSuperadditive => (0, size),
            FamilyKind::SelectionConvex => ((1i64 << size) - 2, (1i64 << size) - 1),
        };
        Interval::new(Scalar::from(lower), Scalar::from(upper)).expect("lower <= upper")
    })
}
