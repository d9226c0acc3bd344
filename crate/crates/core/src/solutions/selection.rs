//! Selection imputations, the selection core and the interval core.
//!
//! Coalition values of a selection are chosen independently, so membership
//! in a union over selections reduces to the most favourable value per
//! coalition: `v(N) = Σx` and `v(S) = w̲(S)` elsewhere.

use serde::Serialize;

use super::classical::{indicator, is_core_member, is_imputation};
use crate::error::Error;
use crate::games::{ClassicalGame, Coalition, IntervalGame, IntervalPayoffVector, PayoffVector};
use crate::lpcore::{enumerate_vertices, LinearSystem, VertexSet};
use crate::numerics::Interval;

/// The selection `v(N) = Σx`, `v(S) = w̲(S)` otherwise.
fn favourable_selection(w: &IntervalGame, x: &PayoffVector) -> ClassicalGame {
    let grand = w.grand();
    ClassicalGame::from_fn(w.players(), |s| if s == grand { x.total() } else { w.lower(s).clone() })
        .expect("valid player count")
}

/// `w̲(N) <= Σx <= w̄(N)` and `x_i >= w̲({i})`.
pub fn is_selection_imputation(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(w.players())?;
    let grand = w.grand();
    Ok(w.worth(grand).contains(&x.total()) && (0..w.players()).all(|i| x[i] >= *w.lower(Coalition::singleton(i))))
}

/// A selection with `x` among its imputations.
pub fn selection_imputation_witness(w: &IntervalGame, x: &PayoffVector) -> Result<Option<ClassicalGame>, Error> {
    if !is_selection_imputation(w, x)? {
        return Ok(None);
    }
    let v = favourable_selection(w, x);
    debug_assert!(w.is_selection(&v) && is_imputation(&v, x).unwrap_or(false));
    Ok(Some(v))
}

/// `w̲(N) <= Σx <= w̄(N)` and `Σ_S x >= w̲(S)` for nonempty `S ≠ N`.
pub fn is_selection_core_member(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(w.players())?;
    let grand = w.grand();
    Ok(w.worth(grand).contains(&x.total())
        && Coalition::nonempty(w.players())
            .filter(|&s| s != grand)
            .all(|s| x.coalition_sum(s) >= *w.lower(s)))
}

/// Certificate for selection-core membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectionCoreWitness {
    /// A selection of `w` whose core contains `x`.
    pub selection: ClassicalGame,
    /// `s(N) = [Σx, Σx]`, `s(S) = [w̲(S), min(Σ_S x, w̄(S))]`. Every
    /// selection of `s` is a selection of `w` with `x` in its core.
    pub subgame: IntervalGame,
}

pub fn selection_core_witness(w: &IntervalGame, x: &PayoffVector) -> Result<Option<SelectionCoreWitness>, Error> {
    if !is_selection_core_member(w, x)? {
        return Ok(None);
    }
    let grand = w.grand();
    let subgame = IntervalGame::from_fn(w.players(), |s| {
        if s == grand {
            Interval::point(x.total())
        } else {
            let cap = x.coalition_sum(s).min(w.upper(s).clone());
            Interval::new(w.lower(s).clone(), cap).expect("x is in the selection core")
        }
    })
    .expect("valid player count");
    let selection = favourable_selection(w, x);
    debug_assert!(w.is_selection(&selection) && is_core_member(&selection, x).unwrap_or(false));
    Ok(Some(SelectionCoreWitness { selection, subgame }))
}

/// The selection core as a linear system in `x`.
pub(crate) fn selection_core_system(w: &IntervalGame) -> LinearSystem {
    let n = w.players();
    let grand = w.grand();
    let mut sys = LinearSystem::new(n).expect("at least one player");
    sys.add_inequality(indicator(n, grand), w.lower(grand).clone())
        .expect("row length matches");
    sys.add_upper_bound(indicator(n, grand), w.upper(grand).clone())
        .expect("row length matches");
    for s in Coalition::nonempty(n).filter(|&s| s != grand) {
        sys.add_inequality(indicator(n, s), w.lower(s).clone())
            .expect("row length matches");
    }
    sys
}

/// Vertices of the selection core, sorted lexicographically.
pub fn selection_core_vertices(w: &IntervalGame) -> Result<VertexSet, Error> {
    enumerate_vertices(&selection_core_system(w))
}

fn expect_interval_len(w: &IntervalGame, payoff: &IntervalPayoffVector) -> Result<(), Error> {
    if payoff.len() != w.players() {
        return Err(Error::Dimension {
            what: "interval payoff vector length",
            expected: w.players(),
            found: payoff.len(),
        });
    }
    Ok(())
}

/// `Σ I_i = w(N)` and `I_i ⪰ w({i})`.
pub fn is_interval_imputation(w: &IntervalGame, payoff: &IntervalPayoffVector) -> Result<bool, Error> {
    expect_interval_len(w, payoff)?;
    let grand = w.grand();
    Ok(payoff.coalition_sum(grand) == *w.worth(grand)
        && (0..w.players()).all(|i| payoff[i].weakly_better(w.worth(Coalition::singleton(i)))))
}

/// Interval imputation with `Σ_S I ⪰ w(S)` for every nonempty `S`.
pub fn is_interval_core_member(w: &IntervalGame, payoff: &IntervalPayoffVector) -> Result<bool, Error> {
    Ok(is_interval_imputation(w, payoff)?
        && Coalition::nonempty(w.players()).all(|s| payoff.coalition_sum(s).weakly_better(w.worth(s))))
}
