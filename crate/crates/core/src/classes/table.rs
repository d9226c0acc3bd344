//! Coalition-indexed value tables and the quantified checks behind every
//! class test.
//!
//! Games are scaled to a common denominator first; when every scaled value
//! fits in `i64` the checks run on `i128`, otherwise on [`Scalar`]. Both are
//! exact.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::games::{ClassicalGame, Coalition, IntervalGame};
use crate::numerics::Scalar;

pub(crate) trait Value: Clone + Ord + Add<Output = Self> + Sub<Output = Self> {}

impl Value for i128 {}

impl Value for Scalar {}

/// A game's values on a numeric grid, indexed by bitmask.
pub(crate) struct Table<T> {
    pub players: usize,
    pub values: Vec<T>,
}

impl<T: Value> Table<T> {
    pub fn at(&self, s: Coalition) -> T {
        self.values[s.index()].clone()
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.players)
    }

    pub fn monotonic(&self) -> bool {
        self.grand()
            .subsets()
            .all(|s| s.subsets().all(|t| self.at(t) <= self.at(s)))
    }

    pub fn superadditive(&self) -> bool {
        self.over_disjoint_pairs(|st, s_t| st <= s_t)
    }

    pub fn additive(&self) -> bool {
        self.over_disjoint_pairs(|st, s_t| st == s_t)
    }

    /// `v(S) + v(T) <= v(S ∪ T) + v(S ∩ T)` over all pairs. Pairs where one
    /// coalition contains the other hold with equality and are skipped.
    pub fn convex(&self) -> bool {
        let n = 1u32 << self.players;
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let (s, t) = (Coalition::from_bits(a), Coalition::from_bits(b));
                !s.is_incomparable(t) || self.at(s) + self.at(t) <= self.at(s.union(t)) + self.at(s.intersection(t))
            })
        })
    }

    /// Applies `check(v(S) + v(T), v(S ∪ T))` to unordered pairs of disjoint
    /// nonempty coalitions; pairs involving `∅` hold trivially.
    fn over_disjoint_pairs(&self, check: impl Fn(T, T) -> bool) -> bool {
        let grand = self.grand();
        Coalition::nonempty(self.players).all(|s| {
            grand
                .difference(s)
                .subsets()
                .filter(|t| t.bits() > s.bits())
                .all(|t| check(self.at(s) + self.at(t), self.at(s.union(t))))
        })
    }
}

/// Lower and upper tables of an interval game on a shared grid.
pub(crate) struct Borders<T> {
    pub lower: Table<T>,
    pub upper: Table<T>,
}

impl<T: Value> Borders<T> {
    fn players(&self) -> usize {
        self.lower.players
    }

    fn lo(&self, s: Coalition) -> T {
        self.lower.at(s)
    }

    fn hi(&self, s: Coalition) -> T {
        self.upper.at(s)
    }

    pub fn length(&self) -> Table<T> {
        Table {
            players: self.players(),
            values: self
                .upper
                .values
                .iter()
                .zip(&self.lower.values)
                .map(|(u, l)| u.clone() - l.clone())
                .collect(),
        }
    }

    /// `w̄(S) <= w̲(T)` for all `S ⊊ T`.
    pub fn selection_monotonic(&self) -> bool {
        let grand = Coalition::grand(self.players());
        grand
            .subsets()
            .all(|t| t.subsets().filter(|&s| s != t).all(|s| self.hi(s) <= self.lo(t)))
    }

    /// `w̄(S) + w̄(T) <= w̲(S ∪ T)` for disjoint nonempty `S, T`.
    pub fn selection_superadditive(&self) -> bool {
        let grand = Coalition::grand(self.players());
        Coalition::nonempty(self.players()).all(|s| {
            grand
                .difference(s)
                .subsets()
                .filter(|t| !t.is_empty() && t.bits() > s.bits())
                .all(|t| self.hi(s) + self.hi(t) <= self.lo(s.union(t)))
        })
    }

    /// `w̄(S) + w̄(T) <= w̲(S ∪ T) + w̲(S ∩ T)` for nonempty incomparable
    /// `S, T`.
    pub fn selection_convex_pairs(&self) -> bool {
        let n = 1u32 << self.players();
        (1..n).all(|a| {
            (a + 1..n).all(|b| {
                let (s, t) = (Coalition::from_bits(a), Coalition::from_bits(b));
                !s.is_incomparable(t) || self.hi(s) + self.hi(t) <= self.lo(s.union(t)) + self.lo(s.intersection(t))
            })
        })
    }

    /// `w̄(S₁ ∪ U) - w̲(S₁) <= w̲(S₂ ∪ U) - w̄(S₂)` for `S₁ ⊊ S₂ ⊆ N ∖ U`
    /// with `U` nonempty (for `U = ∅` the two sides involve comparable
    /// coalitions only).
    pub fn selection_convex_marginal(&self) -> bool {
        let grand = Coalition::grand(self.players());
        Coalition::nonempty(self.players()).all(|u| {
            grand.difference(u).subsets().all(|s2| {
                s2.subsets()
                    .filter(|&s1| s1 != s2)
                    .all(|s1| self.hi(s1.union(u)) + self.hi(s2) <= self.lo(s2.union(u)) + self.lo(s1))
            })
        })
    }

    /// The single-player instance of [`Self::selection_convex_marginal`].
    pub fn selection_convex_single(&self) -> bool {
        let grand = Coalition::grand(self.players());
        (0..self.players()).all(|i| {
            let u = Coalition::singleton(i);
            grand.difference(u).subsets().all(|t2| {
                t2.subsets()
                    .filter(|&t1| t1 != t2)
                    .all(|t1| self.hi(t1.union(u)) + self.hi(t2) <= self.lo(t2.union(u)) + self.lo(t1))
            })
        })
    }
}

/// The scaled representation of a game, picked by magnitude.
pub(crate) enum Grid {
    Small(Borders<i128>),
    Exact(Borders<Scalar>),
}

fn common_denominator<'a>(values: impl Iterator<Item = &'a Scalar>) -> BigInt {
    values.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn scale_to_i128(values: &[&Scalar], factor: &BigInt) -> Option<Vec<i128>> {
    values
        .iter()
        .map(|x| {
            let scaled = x.numer() * (factor / x.denom());
            scaled.to_i64().map(i128::from)
        })
        .collect()
}

impl Grid {
    pub fn of_interval(w: &IntervalGame) -> Grid {
        let lows: Vec<&Scalar> = w.values().iter().map(|i| i.lower()).collect();
        let highs: Vec<&Scalar> = w.values().iter().map(|i| i.upper()).collect();
        let factor = common_denominator(lows.iter().chain(&highs).copied());
        let players = w.players();
        match (scale_to_i128(&lows, &factor), scale_to_i128(&highs, &factor)) {
            (Some(lo), Some(hi)) => Grid::Small(Borders {
                lower: Table { players, values: lo },
                upper: Table { players, values: hi },
            }),
            _ => Grid::Exact(Borders {
                lower: Table {
                    players,
                    values: lows.into_iter().cloned().collect(),
                },
                upper: Table {
                    players,
                    values: highs.into_iter().cloned().collect(),
                },
            }),
        }
    }

    pub fn of_classical(v: &ClassicalGame) -> Grid {
        Grid::of_interval(&v.embed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Interval;

    #[test]
    fn large_values_fall_back_to_exact_tables() {
        let huge: Scalar = "123456789012345678901234567890/7".parse().unwrap();
        let w = IntervalGame::from_fn(2, |_| Interval::point(huge.clone())).unwrap();
        assert!(matches!(Grid::of_interval(&w), Grid::Exact(_)));
        let w = IntervalGame::from_fn(2, |_| Interval::point("1/3".parse().unwrap())).unwrap();
        match Grid::of_interval(&w) {
            Grid::Small(b) => assert_eq!(b.lower.values, vec![0, 1, 1, 1]),
            Grid::Exact(_) => panic!("small rationals should scale to integers"),
        }
    }
}
