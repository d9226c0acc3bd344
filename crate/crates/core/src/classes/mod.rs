//! Membership in the classical, weakly-better-based and selection-based
//! game classes.
//!
//! Selection classes are decided by endpoint characterizations, one
//! quantified inequality per class. [`selection_class_oracle`] decides the
//! same question by enumerating endpoint selections and serves as the
//! independent check.

mod oracle;
mod table;

use std::fmt;

use serde::Serialize;

pub use oracle::{cross_check, selection_class_oracle, Disagreement, OracleVerdict, ORACLE_BUDGET};
use table::{Borders, Grid, Table, Value};

use crate::games::{ClassicalGame, IntervalGame};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalProperty {
    Monotonic,
    Superadditive,
    Additive,
    Convex,
}

impl ClassicalProperty {
    pub const ALL: [ClassicalProperty; 4] = [
        ClassicalProperty::Monotonic,
        ClassicalProperty::Superadditive,
        ClassicalProperty::Additive,
        ClassicalProperty::Convex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalProperty::Monotonic => "monotonic",
            ClassicalProperty::Superadditive => "superadditive",
            ClassicalProperty::Additive => "additive",
            ClassicalProperty::Convex => "convex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalClass {
    /// Length game monotonic.
    SizeMonotonic,
    /// `w(S) + w(T) ⪯ w(S ∪ T)` for disjoint `S, T`, and length game
    /// superadditive.
    SuperadditiveInterval,
    /// Both border games convex.
    SupermodularInterval,
    /// Border games and length game convex.
    ConvexInterval,
}

impl IntervalClass {
    pub const ALL: [IntervalClass; 4] = [
        IntervalClass::SizeMonotonic,
        IntervalClass::SuperadditiveInterval,
        IntervalClass::SupermodularInterval,
        IntervalClass::ConvexInterval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntervalClass::SizeMonotonic => "size-monotonic",
            IntervalClass::SuperadditiveInterval => "superadditive-interval",
            IntervalClass::SupermodularInterval => "supermodular-interval",
            IntervalClass::ConvexInterval => "convex-interval",
        }
    }
}

/// Classes defined by requiring a property of every selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelectionClass {
    SelectionMonotonic,
    SelectionSuperadditive,
    SelectionConvex,
}

impl SelectionClass {
    pub const ALL: [SelectionClass; 3] = [
        SelectionClass::SelectionMonotonic,
        SelectionClass::SelectionSuperadditive,
        SelectionClass::SelectionConvex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SelectionClass::SelectionMonotonic => "selection-monotonic",
            SelectionClass::SelectionSuperadditive => "selection-superadditive",
            SelectionClass::SelectionConvex => "selection-convex",
        }
    }

    /// The property every selection must have.
    pub fn property(self) -> ClassicalProperty {
        match self {
            SelectionClass::SelectionMonotonic => ClassicalProperty::Monotonic,
            SelectionClass::SelectionSuperadditive => ClassicalProperty::Superadditive,
            SelectionClass::SelectionConvex => ClassicalProperty::Convex,
        }
    }
}

/// Equivalent characterizations of selection convexity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConvexVariant {
    /// `w̄(S) + w̄(T) <= w̲(S ∪ T) + w̲(S ∩ T)` for nonempty incomparable `S, T`.
    IncomparablePairs,
    /// `w̄(S₁ ∪ U) - w̲(S₁) <= w̲(S₂ ∪ U) - w̄(S₂)` for `S₁ ⊊ S₂ ⊆ N ∖ U`.
    MarginalGain,
    /// The same with `U` a single player.
    SinglePlayerGain,
}

impl ConvexVariant {
    pub const ALL: [ConvexVariant; 3] = [
        ConvexVariant::IncomparablePairs,
        ConvexVariant::MarginalGain,
        ConvexVariant::SinglePlayerGain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConvexVariant::IncomparablePairs => "incomparable-pairs",
            ConvexVariant::MarginalGain => "marginal-gain",
            ConvexVariant::SinglePlayerGain => "single-player-gain",
        }
    }
}

macro_rules! impl_display_by_name {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    )*};
}

impl_display_by_name!(ClassicalProperty, IntervalClass, SelectionClass, ConvexVariant);

fn table_property<T: Value>(table: &Table<T>, property: ClassicalProperty) -> bool {
    match property {
        ClassicalProperty::Monotonic => table.monotonic(),
        ClassicalProperty::Superadditive => table.superadditive(),
        ClassicalProperty::Additive => table.additive(),
        ClassicalProperty::Convex => table.convex(),
    }
}

fn borders_interval_class<T: Value>(borders: &Borders<T>, class: IntervalClass) -> bool {
    match class {
        IntervalClass::SizeMonotonic => borders.length().monotonic(),
        IntervalClass::SuperadditiveInterval => {
            borders.lower.superadditive() && borders.upper.superadditive() && borders.length().superadditive()
        }
        IntervalClass::SupermodularInterval => borders.lower.convex() && borders.upper.convex(),
        IntervalClass::ConvexInterval => borders.lower.convex() && borders.upper.convex() && borders.length().convex(),
    }
}

fn borders_selection_class<T: Value>(borders: &Borders<T>, class: SelectionClass) -> bool {
    match class {
        SelectionClass::SelectionMonotonic => borders.selection_monotonic(),
        SelectionClass::SelectionSuperadditive => borders.selection_superadditive(),
        SelectionClass::SelectionConvex => borders.selection_convex_pairs(),
    }
}

fn borders_convex_variant<T: Value>(borders: &Borders<T>, variant: ConvexVariant) -> bool {
    match variant {
        ConvexVariant::IncomparablePairs => borders.selection_convex_pairs(),
        ConvexVariant::MarginalGain => borders.selection_convex_marginal(),
        ConvexVariant::SinglePlayerGain => borders.selection_convex_single(),
    }
}

/// Evaluates a classical property from its defining inequalities.
pub fn check_classical(v: &ClassicalGame, property: ClassicalProperty) -> bool {
    match Grid::of_classical(v) {
        Grid::Small(b) => table_property(&b.lower, property),
        Grid::Exact(b) => table_property(&b.lower, property),
    }
}

pub fn check_interval_class(w: &IntervalGame, class: IntervalClass) -> bool {
    match Grid::of_interval(w) {
        Grid::Small(b) => borders_interval_class(&b, class),
        Grid::Exact(b) => borders_interval_class(&b, class),
    }
}

/// Decides a selection class through its endpoint characterization.
pub fn check_selection_class(w: &IntervalGame, class: SelectionClass) -> bool {
    match Grid::of_interval(w) {
        Grid::Small(b) => borders_selection_class(&b, class),
        Grid::Exact(b) => borders_selection_class(&b, class),
    }
}

/// Evaluates one of the equivalent selection-convexity characterizations.
pub fn check_selection_convex_variant(w: &IntervalGame, variant: ConvexVariant) -> bool {
    match Grid::of_interval(w) {
        Grid::Small(b) => borders_convex_variant(&b, variant),
        Grid::Exact(b) => borders_convex_variant(&b, variant),
    }
}

/// Every class verdict for one game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub lower_border: Vec<(ClassicalProperty, bool)>,
    pub upper_border: Vec<(ClassicalProperty, bool)>,
    pub length_game: Vec<(ClassicalProperty, bool)>,
    pub interval: Vec<(IntervalClass, bool)>,
    pub selection: Vec<(SelectionClass, bool)>,
    pub selection_convex_variants: Vec<(ConvexVariant, bool)>,
}

impl Classification {
    pub fn interval_class(&self, class: IntervalClass) -> bool {
        self.interval
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all classes present")
            .1
    }

    pub fn selection_class(&self, class: SelectionClass) -> bool {
        self.selection
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all classes present")
            .1
    }
}

fn classify_borders<T: Value>(b: &Borders<T>) -> Classification {
    let length = b.length();
    let props = |t: &Table<T>| {
        ClassicalProperty::ALL
            .iter()
            .map(|&p| (p, table_property(t, p)))
            .collect::<Vec<_>>()
    };
    Classification {
        lower_border: props(&b.lower),
        upper_border: props(&b.upper),
        length_game: props(&length),
        interval: IntervalClass::ALL
            .iter()
            .map(|&c| (c, borders_interval_class(b, c)))
            .collect(),
        selection: SelectionClass::ALL
            .iter()
            .map(|&c| (c, borders_selection_class(b, c)))
            .collect(),
        selection_convex_variants: ConvexVariant::ALL
            .iter()
            .map(|&v| (v, borders_convex_variant(b, v)))
            .collect(),
    }
}

/// Computes every classical, interval and selection class verdict.
pub fn classify(w: &IntervalGame) -> Classification {
    match Grid::of_interval(w) {
        Grid::Small(b) => classify_borders(&b),
        Grid::Exact(b) => classify_borders(&b),
    }
}

#[cfg(test)]
mod tests;
