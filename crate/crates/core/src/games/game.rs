use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::games::coalition::{check_players, Coalition};
use crate::numerics::{Interval, Scalar};

/// Transferable-utility game: a worth for every coalition, `v(∅) = 0`.
///
/// Worths are stored densely, indexed by coalition bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalGame {
    players: usize,
    worth: Vec<Scalar>,
}

impl ClassicalGame {
    pub fn new(players: usize, worth: Vec<Scalar>) -> Result<Self, Error> {
        check_players(players)?;
        if worth.len() != 1 << players {
            return Err(Error::Dimension {
                what: "characteristic function length",
                expected: 1 << players,
                found: worth.len(),
            });
        }
        if !worth[0].is_zero() {
            return Err(Error::NonzeroEmptyCoalition);
        }
        Ok(ClassicalGame { players, worth })
    }

    /// Builds a game from its values on nonempty coalitions; `f` is never
    /// called for the empty coalition.
    pub fn from_fn(players: usize, mut f: impl FnMut(Coalition) -> Scalar) -> Result<Self, Error> {
        check_players(players)?;
        let worth = Coalition::all(players)
            .map(|s| if s.is_empty() { Scalar::zero() } else { f(s) })
            .collect();
        Ok(ClassicalGame { players, worth })
    }

    pub fn zero(players: usize) -> Result<Self, Error> {
        Self::from_fn(players, |_| Scalar::zero())
    }

    /// Additive game with the given singleton worths.
    pub fn additive(weights: &[Scalar]) -> Result<Self, Error> {
        Self::from_fn(weights.len(), |s| s.members().map(|i| &weights[i]).sum())
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.players)
    }

    pub fn worth(&self, coalition: Coalition) -> &Scalar {
        &self.worth[coalition.index()]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.worth
    }

    /// Copy with one coalition's worth replaced. The empty coalition is fixed.
    pub fn with_worth(&self, coalition: Coalition, value: Scalar) -> Result<Self, Error> {
        if coalition.is_empty() && !value.is_zero() {
            return Err(Error::NonzeroEmptyCoalition);
        }
        let mut worth = self.worth.clone();
        worth[coalition.index()] = value;
        Ok(ClassicalGame {
            players: self.players,
            worth,
        })
    }

    /// The interval game assigning `[v(S), v(S)]` to every coalition. Its
    /// only selection is `self`.
    pub fn embed(&self) -> IntervalGame {
        IntervalGame {
            players: self.players,
            worth: self.worth.iter().cloned().map(Interval::point).collect(),
        }
    }
}

/// Cooperative interval game: a closed interval for every coalition,
/// `w(∅) = [0, 0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalGame {
    players: usize,
    worth: Vec<Interval>,
}

impl IntervalGame {
    pub fn new(players: usize, worth: Vec<Interval>) -> Result<Self, Error> {
        check_players(players)?;
        if worth.len() != 1 << players {
            return Err(Error::Dimension {
                what: "characteristic function length",
                expected: 1 << players,
                found: worth.len(),
            });
        }
        if worth[0] != Interval::zero() {
            return Err(Error::NonzeroEmptyCoalition);
        }
        Ok(IntervalGame { players, worth })
    }

    /// Builds a game from its values on nonempty coalitions.
    pub fn from_fn(players: usize, mut f: impl FnMut(Coalition) -> Interval) -> Result<Self, Error> {
        check_players(players)?;
        let worth = Coalition::all(players)
            .map(|s| if s.is_empty() { Interval::zero() } else { f(s) })
            .collect();
        Ok(IntervalGame { players, worth })
    }

    /// Game with the given border games. Fails if `lower` exceeds `upper`
    /// anywhere.
    pub fn from_borders(lower: &ClassicalGame, upper: &ClassicalGame) -> Result<Self, Error> {
        if lower.players != upper.players {
            return Err(Error::Dimension {
                what: "border game player count",
                expected: lower.players,
                found: upper.players,
            });
        }
        let worth = lower
            .worth
            .iter()
            .zip(&upper.worth)
            .map(|(lo, hi)| Interval::new(lo.clone(), hi.clone()))
            .collect::<Result<_, _>>()?;
        Ok(IntervalGame {
            players: lower.players,
            worth,
        })
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.players)
    }

    pub fn worth(&self, coalition: Coalition) -> &Interval {
        &self.worth[coalition.index()]
    }

    pub fn values(&self) -> &[Interval] {
        &self.worth
    }

    /// `w̲(S)`.
    pub fn lower(&self, coalition: Coalition) -> &Scalar {
        self.worth[coalition.index()].lower()
    }

    /// `w̄(S)`.
    pub fn upper(&self, coalition: Coalition) -> &Scalar {
        self.worth[coalition.index()].upper()
    }

    pub fn with_worth(&self, coalition: Coalition, value: Interval) -> Result<Self, Error> {
        if coalition.is_empty() && value != Interval::zero() {
            return Err(Error::NonzeroEmptyCoalition);
        }
        let mut worth = self.worth.clone();
        worth[coalition.index()] = value;
        Ok(IntervalGame {
            players: self.players,
            worth,
        })
    }

    /// Lower and upper border games `(w̲, w̄)`.
    pub fn border_games(&self) -> (ClassicalGame, ClassicalGame) {
        (self.lower_game(), self.upper_game())
    }

    pub fn lower_game(&self) -> ClassicalGame {
        ClassicalGame {
            players: self.players,
            worth: self.worth.iter().map(|i| i.lower().clone()).collect(),
        }
    }

    pub fn upper_game(&self) -> ClassicalGame {
        ClassicalGame {
            players: self.players,
            worth: self.worth.iter().map(|i| i.upper().clone()).collect(),
        }
    }

    /// `|w|(S) = w̄(S) - w̲(S)`.
    pub fn length_game(&self) -> ClassicalGame {
        ClassicalGame {
            players: self.players,
            worth: self.worth.iter().map(Interval::width).collect(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.worth.iter().all(Interval::is_degenerate)
    }

    /// Whether `v(S) ∈ w(S)` for every coalition.
    pub fn is_selection(&self, v: &ClassicalGame) -> bool {
        v.players == self.players
            && self
                .worth
                .iter()
                .zip(&v.worth)
                .all(|(range, value)| range.contains(value))
    }

    /// The classical game with the worth of every interval's midpoint.
    pub fn midpoint_selection(&self) -> ClassicalGame {
        let half = Scalar::from_ratio(1, 2).expect("nonzero denominator");
        ClassicalGame {
            players: self.players,
            worth: self.worth.iter().map(|i| (i.lower() + i.upper()) * &half).collect(),
        }
    }

    /// Copy with `w(N)` collapsed to `[w̲(N), w̲(N)]`.
    pub fn truncate_grand(&self) -> IntervalGame {
        let grand = self.grand();
        let collapsed = Interval::point(self.lower(grand).clone());
        let mut worth = self.worth.clone();
        worth[grand.index()] = collapsed;
        IntervalGame {
            players: self.players,
            worth,
        }
    }
}

/// Serializes as `{"players": n, "worth": {"{1,2}": value, ...}}` over
/// nonempty coalitions in bitmask order.
fn serialize_game<S: Serializer, T: Serialize>(serializer: S, players: usize, worth: &[T]) -> Result<S::Ok, S::Error> {
    struct Entries<'a, T>(&'a [T]);
    impl<T: Serialize> Serialize for Entries<'_, T> {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            let mut map = serializer.serialize_map(Some(self.0.len() - 1))?;
            for (bits, value) in self.0.iter().enumerate().skip(1) {
                map.serialize_entry(&Coalition::from_bits(bits as u32).to_string(), value)?;
            }
            map.end()
        }
    }
    let mut st = serializer.serialize_struct("Game", 2)?;
    st.serialize_field("players", &players)?;
    st.serialize_field("worth", &Entries(worth))?;
    st.end()
}

impl Serialize for ClassicalGame {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_game(serializer, self.players, &self.worth)
    }
}

impl Serialize for IntervalGame {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_game(serializer, self.players, &self.worth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(text: &str) -> Interval {
        text.parse().unwrap()
    }

    fn worked_example() -> IntervalGame {
        IntervalGame::from_fn(2, |s| if s.len() == 1 { iv("[1,3]") } else { iv("[1,4]") }).unwrap()
    }

    #[test]
    fn border_games_of_worked_example() {
        let (lower, upper) = worked_example().border_games();
        let on = |g: &ClassicalGame| [1u32, 2, 3].map(|b| g.worth(Coalition::from_bits(b)).clone()).to_vec();
        assert_eq!(on(&lower), vec![1.into(), 1.into(), 1.into()]);
        assert_eq!(on(&upper), vec![3.into(), 3.into(), 4.into()]);
    }

    #[test]
    fn selections_of_worked_example() {
        let w = worked_example();
        let (lower, upper) = w.border_games();
        assert!(w.is_selection(&lower));
        assert!(w.is_selection(&upper));
        let v = ClassicalGame::from_fn(2, |s| if s.len() == 1 { 2.into() } else { 4.into() }).unwrap();
        assert!(w.is_selection(&v));
        let too_big = upper.with_worth(w.grand(), 5.into()).unwrap();
        assert!(!w.is_selection(&too_big));
    }

    #[test]
    fn embedding_round_trips_through_borders() {
        let v = ClassicalGame::from_fn(3, |s| Scalar::from(s.bits() as i64 - 2)).unwrap();
        let d = v.embed();
        assert!(d.is_degenerate());
        let (lower, upper) = d.border_games();
        assert_eq!(lower, v);
        assert_eq!(upper, v);
        assert_eq!(d.length_game(), ClassicalGame::zero(3).unwrap());
        assert_eq!(d.truncate_grand(), d);
    }

    #[test]
    fn truncation_replaces_only_the_grand_coalition() {
        let t = worked_example().truncate_grand();
        assert_eq!(t.worth(t.grand()), &iv("[1,1]"));
        assert_eq!(t.worth(Coalition::singleton(0)), &iv("[1,3]"));
    }

    #[test]
    fn construction_enforces_empty_coalition() {
        let bad = vec![Scalar::one(), Scalar::zero()];
        assert_eq!(ClassicalGame::new(1, bad), Err(Error::NonzeroEmptyCoalition));
        let short = vec![Interval::zero(); 3];
        assert!(matches!(IntervalGame::new(2, short), Err(Error::Dimension { .. })));
        assert!(ClassicalGame::zero(17).is_err());
    }

    #[test]
    fn borders_must_be_ordered() {
        let lower = ClassicalGame::additive(&[2.into(), 0.into()]).unwrap();
        let upper = ClassicalGame::additive(&[1.into(), 1.into()]).unwrap();
        assert!(matches!(
            IntervalGame::from_borders(&lower, &upper),
            Err(Error::InvertedInterval { .. })
        ));
    }
}
