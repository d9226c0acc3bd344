//! Solution concepts for classical and interval games.
//!
//! Classical imputations and core; the selection imputation set and
//! selection core (unions over selections); the interval core over interval
//! payoff vectors; the vectors generated by the interval core and their
//! coincidence with the selection core; strong imputations, the strong core
//! and strong balancedness.
//!
//! Every `true` answer that has a certificate is returned with one, and the
//! certificates can be re-checked with the plain membership predicates.

mod classical;
mod gen;
pub mod oracle;
mod selection;
mod strong;

pub use classical::{core_nonempty, is_core_member, is_imputation};
pub use gen::{
    core_coincidence, gen_failing_rows, gen_membership, CoincidenceVerdict, GenRow, GenWitness,
    DEFAULT_COINCIDENCE_BUDGET,
};
pub use selection::{
    is_interval_core_member, is_interval_imputation, is_selection_core_member, is_selection_imputation,
    selection_core_vertices, selection_core_witness, selection_imputation_witness, SelectionCoreWitness,
};
pub use strong::{
    is_strong_core_member, is_strong_imputation, is_strongly_balanced, strong_core_nonempty, strong_core_vertices,
    strong_imputation_nonempty, strongly_balanced_witness, worst_selection,
};

#[cfg(test)]
mod tests;
