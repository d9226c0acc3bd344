//! Endpoint-selection oracles for the selection-based solution concepts.
//!
//! Each constraint of an imputation or core set involves a single coalition
//! value, so "for some selection" and "for every selection" are settled on
//! selections taking interval endpoints, plus `v(N) = Σx` where efficiency
//! must hold exactly. These routines enumerate those selections and test the
//! classical definitions; they share no code with the closed forms.

use super::classical::{core_nonempty, is_core_member, is_imputation};
use crate::error::Error;
use crate::games::{ClassicalGame, Coalition, IntervalGame, PayoffVector};
use crate::numerics::Scalar;

/// Largest player count accepted by the oracles in this module.
pub const SOLUTION_ORACLE_BUDGET: usize = 4;

fn check_budget(w: &IntervalGame, operation: &'static str, budget: usize) -> Result<(), Error> {
    if w.players() > budget {
        return Err(Error::Budget {
            operation,
            players: w.players(),
            budget,
        });
    }
    Ok(())
}

/// Calls `f` on every selection that takes an endpoint on each coalition in
/// `free` and `fixed(S)` elsewhere; stops at the first `true`.
fn any_endpoint_selection(
    w: &IntervalGame,
    free: &[Coalition],
    fixed: impl Fn(Coalition) -> Scalar,
    mut f: impl FnMut(&ClassicalGame) -> bool,
) -> bool {
    (0..1u64 << free.len()).any(|choice| {
        let v = ClassicalGame::from_fn(w.players(), |s| match free.iter().position(|&t| t == s) {
            Some(k) if choice >> k & 1 == 1 => w.upper(s).clone(),
            Some(_) => w.lower(s).clone(),
            None => fixed(s),
        })
        .expect("valid player count");
        f(&v)
    })
}

fn proper(w: &IntervalGame) -> Vec<Coalition> {
    let grand = w.grand();
    Coalition::nonempty(w.players()).filter(|&s| s != grand).collect()
}

/// Whether some selection has `x` in its core.
pub fn selection_core_oracle(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    check_budget(w, "selection core oracle", SOLUTION_ORACLE_BUDGET)?;
    x.expect_len(w.players())?;
    let total = x.total();
    if !w.worth(w.grand()).contains(&total) {
        return Ok(false);
    }
    Ok(any_endpoint_selection(
        w,
        &proper(w),
        |_| total.clone(),
        |v| is_core_member(v, x).unwrap_or(false),
    ))
}

/// Whether some selection has `x` among its imputations.
pub fn selection_imputation_oracle(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    check_budget(w, "selection imputation oracle", SOLUTION_ORACLE_BUDGET)?;
    x.expect_len(w.players())?;
    let total = x.total();
    if !w.worth(w.grand()).contains(&total) {
        return Ok(false);
    }
    let grand = w.grand();
    let singletons: Vec<Coalition> = (0..w.players())
        .map(Coalition::singleton)
        .filter(|&s| s != grand)
        .collect();
    Ok(any_endpoint_selection(
        w,
        &singletons,
        |s| if s == grand { total.clone() } else { w.lower(s).clone() },
        |v| is_imputation(v, x).unwrap_or(false),
    ))
}

/// Whether every endpoint selection has `x` in its core.
pub fn strong_core_oracle(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    check_budget(w, "strong core oracle", SOLUTION_ORACLE_BUDGET)?;
    x.expect_len(w.players())?;
    let all: Vec<Coalition> = Coalition::nonempty(w.players()).collect();
    Ok(!any_endpoint_selection(
        w,
        &all,
        |_| Scalar::zero(),
        |v| !is_core_member(v, x).unwrap_or(false),
    ))
}

/// Whether every endpoint selection has `x` among its imputations.
pub fn strong_imputation_oracle(w: &IntervalGame, x: &PayoffVector) -> Result<bool, Error> {
    check_budget(w, "strong imputation oracle", SOLUTION_ORACLE_BUDGET)?;
    x.expect_len(w.players())?;
    let mut relevant: Vec<Coalition> = (0..w.players()).map(Coalition::singleton).collect();
    if w.players() > 1 {
        relevant.push(w.grand());
    }
    Ok(!any_endpoint_selection(
        w,
        &relevant,
        |s| w.lower(s).clone(),
        |v| !is_imputation(v, x).unwrap_or(false),
    ))
}

/// Largest player count for [`strongly_balanced_oracle`], which solves one
/// linear program per endpoint selection.
pub const BALANCED_ORACLE_BUDGET: usize = 3;

/// Whether every endpoint selection has a nonempty core.
pub fn strongly_balanced_oracle(w: &IntervalGame) -> Result<bool, Error> {
    check_budget(w, "strong balancedness oracle", BALANCED_ORACLE_BUDGET)?;
    let all: Vec<Coalition> = Coalition::nonempty(w.players()).collect();
    Ok(!any_endpoint_selection(
        w,
        &all,
        |_| Scalar::zero(),
        |v| core_nonempty(v).is_none(),
    ))
}
