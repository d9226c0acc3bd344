//! Exact linear feasibility, optimization and vertex enumeration over
//! rational polyhedra.
//!
//! Every decision in [`crate::solutions`] bottoms out here. Witnesses
//! returned by [`feasible`] and [`minimize`] are re-checked with
//! [`LinearSystem::is_satisfied_by`] before they leave this module.

mod simplex;
mod system;
mod vertices;

pub use system::{rank, LinearSystem, Row, RowId};
pub use vertices::{enumerate_vertices, VertexSet};

use simplex::{solve, Solution};

use crate::error::Error;
use crate::numerics::Scalar;

/// Result of an optimization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimum {
    Infeasible,
    Unbounded,
    Optimal { point: Vec<Scalar>, value: Scalar },
}

/// A point satisfying every row of `sys`, or `None` if there is none.
pub fn feasible(sys: &LinearSystem) -> Option<Vec<Scalar>> {
    match solve(sys, None) {
        Solution::Optimal(point) => {
            assert!(sys.is_satisfied_by(&point), "simplex produced an infeasible witness");
            Some(point)
        }
        Solution::Infeasible => None,
        Solution::Unbounded => unreachable!("feasibility has no objective"),
    }
}

/// Minimizes `costs · x` over the system.
pub fn minimize(sys: &LinearSystem, costs: &[Scalar]) -> Result<Optimum, Error> {
    if costs.len() != sys.dim() {
        return Err(Error::MalformedSystem(format!(
            "objective has {} coefficients, system has {} variables",
            costs.len(),
            sys.dim()
        )));
    }
    Ok(match solve(sys, Some(costs)) {
        Solution::Infeasible => Optimum::Infeasible,
        Solution::Unbounded => Optimum::Unbounded,
        Solution::Optimal(point) => {
            assert!(sys.is_satisfied_by(&point), "simplex produced an infeasible optimum");
            let value = costs.iter().zip(&point).map(|(c, x)| c * x).sum();
            Optimum::Optimal { point, value }
        }
    })
}

/// Maximizes `costs · x` over the system.
pub fn maximize(sys: &LinearSystem, costs: &[Scalar]) -> Result<Optimum, Error> {
    let negated: Vec<Scalar> = costs.iter().map(|c| -c).collect();
    Ok(match minimize(sys, &negated)? {
        Optimum::Optimal { point, value } => Optimum::Optimal { point, value: -value },
        other => other,
    })
}

/// An irreducible infeasible subset of the rows of an infeasible system,
/// found by a deletion filter. Sign restrictions are always kept. Returns
/// `None` when the system is feasible.
pub fn irreducible_infeasible_subsystem(sys: &LinearSystem) -> Option<Vec<RowId>> {
    if feasible(sys).is_some() {
        return None;
    }
    let mut kept: Vec<RowId> = sys.row_ids().collect();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if feasible(&sys.restricted_to(&trial)).is_none() {
            kept = trial;
        } else {
            i += 1;
        }
    }
    Some(kept)
}
