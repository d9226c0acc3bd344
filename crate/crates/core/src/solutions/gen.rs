//! Real payoff vectors generated by the interval core, and the coincidence
//! of that set with the selection core.
//!
//! `x` is generated iff `([x_i - l_i, x_i + u_i])_i` is in the interval core
//! for some `l, u >= 0`, which is a linear system in `(l, u)`. The set of
//! generated vectors is a projection of a polyhedron, hence convex, and is
//! contained in the selection core. The two sets coincide iff every vertex
//! of the selection core is generated.

use std::fmt;

use serde::{Serialize, Serializer};

use super::classical::indicator;
use super::selection::{is_interval_core_member, selection_core_vertices};
use crate::error::Error;
use crate::games::{Coalition, IntervalGame, IntervalPayoffVector, PayoffVector};
use crate::lpcore::{feasible, irreducible_infeasible_subsystem, LinearSystem, RowId};
use crate::numerics::{Interval, Scalar};

/// Default largest player count for [`core_coincidence`].
pub const DEFAULT_COINCIDENCE_BUDGET: usize = 6;

/// Nonnegative offsets `l, u` placing `x` in an interval core element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenWitness {
    pub l: PayoffVector,
    pub u: PayoffVector,
}

impl GenWitness {
    /// `([x_i - l_i, x_i + u_i])_i`.
    pub fn interval_payoff(&self, x: &PayoffVector) -> IntervalPayoffVector {
        IntervalPayoffVector::new(
            x.iter()
                .zip(self.l.iter().zip(self.u.iter()))
                .map(|(xi, (li, ui))| Interval::new(xi - li, xi + ui).expect("l, u >= 0"))
                .collect(),
        )
    }

    /// Checks the witness against the interval core definition directly.
    pub fn verify(&self, w: &IntervalGame, x: &PayoffVector) -> bool {
        let n = w.players();
        self.l.len() == n
            && self.u.len() == n
            && x.len() == n
            && self.l.iter().chain(self.u.iter()).all(|v| !v.is_negative())
            && is_interval_core_member(w, &self.interval_payoff(x)).unwrap_or(false)
    }
}

/// A row of the generation system, for diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenRow {
    /// `Σ (x_i - l_i) = w̲(N)`.
    LowerEfficiency,
    /// `Σ (x_i + u_i) = w̄(N)`.
    UpperEfficiency,
    /// `Σ_S (x_i - l_i) >= w̲(S)`.
    Lower(Coalition),
    /// `Σ_S (x_i + u_i) >= w̄(S)`.
    Upper(Coalition),
}

impl fmt::Display for GenRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenRow::LowerEfficiency => f.write_str("sum over N of (x - l) = lower(N)"),
            GenRow::UpperEfficiency => f.write_str("sum over N of (x + u) = upper(N)"),
            GenRow::Lower(s) => write!(f, "sum over {s} of (x - l) >= lower({s})"),
            GenRow::Upper(s) => write!(f, "sum over {s} of (x + u) >= upper({s})"),
        }
    }
}

impl Serialize for GenRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The system in `(l, u) ∈ R^{2n}`, together with a label per row.
///
/// Rows for `S = N` in inequality form are implied by the efficiency
/// equalities and omitted.
fn gen_system(w: &IntervalGame, x: &PayoffVector) -> (LinearSystem, Vec<(RowId, GenRow)>) {
    let n = w.players();
    let grand = w.grand();
    let mut sys = LinearSystem::new(2 * n).expect("at least one player");
    let mut labels = Vec::new();
    let lower_part = |s: Coalition| {
        let mut row: Vec<Scalar> = indicator(n, s).into_iter().map(|a| -a).collect();
        row.extend((0..n).map(|_| Scalar::zero()));
        row
    };
    let upper_part = |s: Coalition| {
        let mut row: Vec<Scalar> = (0..n).map(|_| Scalar::zero()).collect();
        row.extend(indicator(n, s));
        row
    };

    let total = x.total();
    let id = sys
        .add_equality(lower_part(grand), w.lower(grand) - &total)
        .expect("row length matches");
    labels.push((id, GenRow::LowerEfficiency));
    let id = sys
        .add_equality(upper_part(grand), w.upper(grand) - &total)
        .expect("row length matches");
    labels.push((id, GenRow::UpperEfficiency));
    for s in Coalition::nonempty(n).filter(|&s| s != grand) {
        let sum = x.coalition_sum(s);
        let id = sys
            .add_inequality(lower_part(s), w.lower(s) - &sum)
            .expect("row length matches");
        labels.push((id, GenRow::Lower(s)));
        let id = sys
            .add_inequality(upper_part(s), w.upper(s) - &sum)
            .expect("row length matches");
        labels.push((id, GenRow::Upper(s)));
    }
    sys.set_all_nonneg();
    (sys, labels)
}

/// A witness that `x` is generated by the interval core, or `None`.
pub fn gen_membership(w: &IntervalGame, x: &PayoffVector) -> Result<Option<GenWitness>, Error> {
    x.expect_len(w.players())?;
    let n = w.players();
    let (sys, _) = gen_system(w, x);
    Ok(feasible(&sys).map(|mut point| {
        let u = point.split_off(n);
        let witness = GenWitness {
            l: PayoffVector::new(point),
            u: PayoffVector::new(u),
        };
        debug_assert!(witness.verify(w, x));
        witness
    }))
}

/// Rows of the generation system that cannot hold together for `x`, or
/// `None` if `x` is generated. The `l` rows and the `u` rows involve
/// disjoint variables; an irreducible infeasible set is reported for each
/// part that is infeasible on its own, `l` part first. Nonnegativity of
/// `l, u` is always assumed.
pub fn gen_failing_rows(w: &IntervalGame, x: &PayoffVector) -> Result<Option<Vec<GenRow>>, Error> {
    x.expect_len(w.players())?;
    let (sys, labels) = gen_system(w, x);
    if feasible(&sys).is_some() {
        return Ok(None);
    }
    let is_lower = |row: &GenRow| matches!(row, GenRow::LowerEfficiency | GenRow::Lower(_));
    let mut failing = Vec::new();
    for lower in [true, false] {
        let part: Vec<RowId> = labels
            .iter()
            .filter(|(_, row)| is_lower(row) == lower)
            .map(|&(id, _)| id)
            .collect();
        if let Some(rows) = irreducible_infeasible_subsystem(&sys.restricted_to(&part)) {
            failing.extend(rows.into_iter().map(|id| {
                let original = original_row(&part, id);
                labels.iter().find(|(l, _)| *l == original).expect("labelled row").1
            }));
        }
    }
    Ok(Some(failing))
}

/// Maps a row of `sys.restricted_to(part)` back to its row in `sys`.
fn original_row(part: &[RowId], id: RowId) -> RowId {
    let (equality, k) = match id {
        RowId::Equality(k) => (true, k),
        RowId::Inequality(k) => (false, k),
    };
    part.iter()
        .copied()
        .filter(|r| matches!(r, RowId::Equality(_)) == equality)
        .nth(k)
        .expect("row of the restricted system")
}

/// Outcome of the coincidence test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidenceVerdict {
    pub coincident: bool,
    /// The lexicographically first selection-core vertex that is not generated.
    pub counterexample: Option<PayoffVector>,
    /// Rows of the generation system that fail together at the counterexample.
    pub failing_rows: Vec<GenRow>,
    /// Number of selection-core vertices.
    pub vertices: usize,
}

/// Decides whether the interval core generates the whole selection core.
///
/// An empty selection core counts as coincident.
pub fn core_coincidence(w: &IntervalGame, budget: usize) -> Result<CoincidenceVerdict, Error> {
    if w.players() > budget {
        return Err(Error::Budget {
            operation: "core coincidence",
            players: w.players(),
            budget,
        });
    }
    let vertices = selection_core_vertices(w)?;
    for v in vertices.vertices() {
        let x = PayoffVector::new(v.clone());
        if gen_membership(w, &x)?.is_none() {
            let failing_rows = gen_failing_rows(w, &x)?.expect("x is not generated");
            return Ok(CoincidenceVerdict {
                coincident: false,
                counterexample: Some(x),
                failing_rows,
                vertices: vertices.len(),
            });
        }
    }
    Ok(CoincidenceVerdict {
        coincident: true,
        counterexample: None,
        failing_rows: Vec::new(),
        vertices: vertices.len(),
    })
}
