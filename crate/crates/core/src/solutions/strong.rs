//! Payoff vectors that work for every selection at once.
//!
//! A vector is efficient for every selection only if `w(N)` is degenerate.
//! The binding selection for each remaining constraint takes the upper
//! endpoint.

use super::classical::{core_nonempty, indicator};
use crate::error::Error;
use crate::games::{ClassicalGame, Coalition, IntervalGame, PayoffVector};
use crate::lpcore::{enumerate_vertices, LinearSystem, VertexSet};
use crate::numerics::Scalar;

/// An imputation of every selection.
pub fn is_strong_imputation(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(w.players())?;
    let grand = w.grand();
    Ok(w.worth(grand).is_degenerate()
        && x.total() == *w.lower(grand)
        && (0..w.players()).all(|i| x[i] >= *w.upper(Coalition::singleton(i))))
}

/// A core element of every selection.
pub fn is_strong_core_member(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    x.expect_len(w.players())?;
    let grand = w.grand();
    Ok(w.worth(grand).is_degenerate()
        && x.total() == *w.lower(grand)
        && Coalition::nonempty(w.players()).all(|s| x.coalition_sum(s) >= *w.upper(s)))
}

/// A strong core element, found as a core element of the upper game when
/// `w(N)` is degenerate.
pub fn strong_core_nonempty(w: &IntervalGame) -> Option<PayoffVector> {
    if !w.worth(w.grand()).is_degenerate() {
        return None;
    }
    core_nonempty(&w.upper_game())
}

/// A strong imputation, or `None`. Exists iff `w(N)` is degenerate and
/// `Σ w̄({i}) <= w̲(N)`; the surplus goes to player 1.
pub fn strong_imputation_nonempty(w: &IntervalGame) -> Option<PayoffVector> {
    let grand = w.grand();
    if !w.worth(grand).is_degenerate() {
        return None;
    }
    let mut x: Vec<_> = (0..w.players())
        .map(|i| w.upper(Coalition::singleton(i)).clone())
        .collect();
    let surplus = w.lower(grand) - x.iter().sum::<Scalar>();
    if surplus.is_negative() {
        return None;
    }
    x[0] += surplus;
    Some(PayoffVector::new(x))
}

/// Vertices of the strong core, taken straight from the definition: the
/// efficiency rows of both endpoint values of `w(N)` and `Σ_S x >= w(S)`
/// for both endpoints of every other coalition.
pub fn strong_core_vertices(w: &IntervalGame) -> Result<VertexSet, Error> {
    let n = w.players();
    let grand = w.grand();
    let mut sys = LinearSystem::new(n)?;
    sys.add_equality(indicator(n, grand), w.lower(grand).clone())?;
    sys.add_equality(indicator(n, grand), w.upper(grand).clone())?;
    for s in Coalition::nonempty(n).filter(|&s| s != grand) {
        sys.add_inequality(indicator(n, s), w.lower(s).clone())?;
        sys.add_inequality(indicator(n, s), w.upper(s).clone())?;
    }
    enumerate_vertices(&sys)
}

/// The selection with `v(S) = w̄(S)` for `S ≠ N` and `v(N) = w̲(N)`. A core
/// element of it, topped up on one player, is a core element of any
/// selection.
pub fn worst_selection(w: &IntervalGame) -> ClassicalGame {
    let grand = w.grand();
    ClassicalGame::from_fn(w.players(), |s| {
        if s == grand {
            w.lower(grand).clone()
        } else {
            w.upper(s).clone()
        }
    })
    .expect("valid player count")
}

/// Whether every selection has a nonempty core.
pub fn is_strongly_balanced(w: &IntervalGame) -> bool {
    strongly_balanced_witness(w).is_some()
}

/// A core element of [`worst_selection`], if any.
pub fn strongly_balanced_witness(w: &IntervalGame) -> Option<PayoffVector> {
    core_nonempty(&worst_selection(w))
}
