use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Largest supported player count.
pub const MAX_PLAYERS: usize = 16;

pub(crate) fn check_players(players: usize) -> Result<(), Error> {
    if players == 0 || players > MAX_PLAYERS {
        return Err(Error::PlayerCount(players));
    }
    Ok(())
}

/// A set of players, stored as a bitmask.
///
/// Bit `i` stands for player `i + 1`; player labels are 1-based everywhere
/// outside this type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    /// The grand coalition `{1, ..., players}`.
    pub fn grand(players: usize) -> Self {
        Coalition(((1u64 << players) - 1) as u32)
    }

    /// Coalition holding only the player at 0-based `index`.
    pub fn singleton(index: usize) -> Self {
        Coalition(1 << index)
    }

    /// Builds a coalition from 1-based player labels.
    pub fn from_players(players: &[usize]) -> Self {
        Coalition(players.iter().fold(0, |bits, &p| bits | (1 << (p - 1))))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the player at 0-based `index` belongs to the coalition.
    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn with(self, index: usize) -> Coalition {
        Coalition(self.0 | (1 << index))
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Coalition) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// Neither coalition contains the other.
    pub fn is_incomparable(self, other: Coalition) -> bool {
        !self.is_subset(other) && !other.is_subset(self)
    }

    /// 0-based indices of the members, ascending.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// Every subset of this coalition, including the empty set and itself,
    /// in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(Coalition(current))
        })
    }

    /// All coalitions of `players` players, `∅` first, by bitmask value.
    pub fn all(players: usize) -> impl Iterator<Item = Coalition> {
        (0..1u32 << players).map(Coalition)
    }

    /// All nonempty coalitions of `players` players, by bitmask value.
    pub fn nonempty(players: usize) -> impl Iterator<Item = Coalition> {
        (1..1u32 << players).map(Coalition)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Coalition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members().map(|i| i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_enumerated_once_each() {
        let c = Coalition::from_players(&[1, 3, 4]);
        let subs: Vec<_> = c.subsets().map(Coalition::bits).collect();
        assert_eq!(subs, vec![0, 1, 4, 5, 8, 9, 12, 13]);
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
        assert_eq!(Coalition::grand(16).subsets().count(), 1 << 16);
    }

    #[test]
    fn set_relations() {
        let a = Coalition::from_players(&[1, 2]);
        let b = Coalition::from_players(&[2, 3]);
        assert!(a.is_incomparable(b));
        assert!(!a.is_proper_subset(a));
        assert!(a.is_subset(a));
        assert_eq!(a.union(b), Coalition::grand(3));
        assert_eq!(a.intersection(b), Coalition::from_players(&[2]));
        assert_eq!(a.to_string(), "{1,2}");
        assert_eq!(Coalition::EMPTY.to_string(), "{}");
        assert_eq!(Coalition::grand(16).len(), 16);
    }

    #[test]
    fn player_bounds() {
        assert!(check_players(0).is_err());
        assert!(check_players(17).is_err());
        assert!(check_players(16).is_ok());
    }
}
