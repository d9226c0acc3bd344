//! Brute-force selection oracle.
//!
//! A game with intervals on its `2^n - 1` nonempty coalitions belongs to a
//! selection class iff every selection does. All selections are convex
//! combinations of the `2^(2^n - 1)` endpoint selections and each class is
//! cut out by linear inequalities, so checking endpoint selections suffices.

use serde::Serialize;

use super::table::{Borders, Grid, Table, Value};
use super::{table_property, SelectionClass};
use crate::error::Error;
use crate::games::{ClassicalGame, Coalition, IntervalGame};

/// Largest player count the oracle accepts.
pub const ORACLE_BUDGET: usize = 4;

/// Oracle verdict for one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub class: SelectionClass,
    pub holds: bool,
    /// An endpoint selection without the class property, if any.
    pub violating_selection: Option<ClassicalGame>,
}

/// Bitmask over nonempty coalitions: bit `S - 1` set means `w̄(S)` is taken.
fn endpoint_table<T: Value>(borders: &Borders<T>, choice: u64) -> Table<T> {
    let values = (0..borders.lower.values.len())
        .map(|s| {
            if s > 0 && choice >> (s - 1) & 1 == 1 {
                borders.upper.values[s].clone()
            } else {
                borders.lower.values[s].clone()
            }
        })
        .collect();
    Table {
        players: borders.lower.players,
        values,
    }
}

fn first_violation<T: Value>(borders: &Borders<T>, class: SelectionClass) -> Option<u64> {
    let count = 1u64 << ((1u64 << borders.lower.players) - 1);
    (0..count).find(|&choice| !table_property(&endpoint_table(borders, choice), class.property()))
}

fn selection_from_choice(w: &IntervalGame, choice: u64) -> ClassicalGame {
    ClassicalGame::from_fn(w.players(), |s: Coalition| {
        if choice >> (s.index() - 1) & 1 == 1 {
            w.upper(s).clone()
        } else {
            w.lower(s).clone()
        }
    })
    .expect("selection of a valid game")
}

/// Decides a selection class by enumerating all endpoint selections.
pub fn selection_class_oracle(w: &IntervalGame, class: SelectionClass) -> Result<OracleVerdict, Error> {
    if w.players() > ORACLE_BUDGET {
        return Err(Error::Budget {
            operation: "selection oracle",
            players: w.players(),
            budget: ORACLE_BUDGET,
        });
    }
    let violation = match Grid::of_interval(w) {
        Grid::Small(b) => first_violation(&b, class),
        Grid::Exact(b) => first_violation(&b, class),
    };
    Ok(OracleVerdict {
        class,
        holds: violation.is_none(),
        violating_selection: violation.map(|c| selection_from_choice(w, c)),
    })
}

/// A class on which a characterization and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub class: SelectionClass,
    pub characterization: bool,
    pub oracle: bool,
}

/// Compares `characterization` against the oracle on every selection class.
///
/// The characterization is a parameter so the comparison itself can be
/// tested with a deliberately wrong one.
pub fn cross_check<F>(w: &IntervalGame, characterization: F) -> Result<Vec<Disagreement>, Error>
where
    F: Fn(&IntervalGame, SelectionClass) -> bool,
{
    let mut out = Vec::new();
    for class in SelectionClass::ALL {
        let oracle = selection_class_oracle(w, class)?.holds;
        let claimed = characterization(w, class);
        if oracle != claimed {
            out.push(Disagreement {
                class,
                characterization: claimed,
                oracle,
            });
        }
    }
    Ok(out)
}
