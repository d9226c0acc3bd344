//! Report documents and their text rendering.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::classes::Classification;
use crate::games::{ClassicalGame, IntervalPayoffVector, PayoffVector};
use crate::solutions::{CoincidenceVerdict, GenRow, GenWitness, SelectionCoreWitness};

/// Named verdicts, serialized as an ordered map.
#[derive(Clone, Debug, Default)]
pub struct Verdicts(pub Vec<(String, bool)>);

impl Verdicts {
    fn from_pairs<T: std::fmt::Display>(pairs: &[(T, bool)]) -> Self {
        Verdicts(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }

    fn text(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for Verdicts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub source: String,
    pub players: usize,
    pub lower_border: Verdicts,
    pub upper_border: Verdicts,
    pub length_game: Verdicts,
    pub interval_classes: Verdicts,
    pub selection_classes: Verdicts,
    pub selection_convex_variants: Verdicts,
}

impl ClassifyReport {
    pub fn new(source: String, players: usize, c: &Classification) -> Self {
        ClassifyReport {
            source,
            players,
            lower_border: Verdicts::from_pairs(&c.lower_border),
            upper_border: Verdicts::from_pairs(&c.upper_border),
            length_game: Verdicts::from_pairs(&c.length_game),
            interval_classes: Verdicts::from_pairs(&c.interval),
            selection_classes: Verdicts::from_pairs(&c.selection),
            selection_convex_variants: Verdicts::from_pairs(&c.selection_convex_variants),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("game {} ({} players)\n", self.source, self.players);
        for (label, v) in [
            ("lower border", &self.lower_border),
            ("upper border", &self.upper_border),
            ("length game", &self.length_game),
            ("interval classes", &self.interval_classes),
            ("selection classes", &self.selection_classes),
            ("selection convex variants", &self.selection_convex_variants),
        ] {
            let _ = writeln!(out, "  {label}: {}", v.text());
        }
        out
    }
}

/// Certificate attached to a membership verdict.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Selection {
        selection: ClassicalGame,
    },
    SelectionCore(SelectionCoreWitness),
    Gen {
        witness: GenWitness,
        interval_payoff: IntervalPayoffVector,
    },
    GenFailure {
        failing_rows: Vec<GenRow>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub concept: String,
    pub payoff: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl MembershipReport {
    pub fn text(&self) -> String {
        let mut out = format!("{} {}: {}\n", self.concept, self.payoff, self.holds);
        match &self.witness {
            None => {}
            Some(Witness::Selection { selection }) => {
                let _ = writeln!(out, "witness selection:\n{}", indent(&selection_text(selection)));
            }
            Some(Witness::SelectionCore(w)) => {
                let _ = writeln!(out, "witness selection:\n{}", indent(&selection_text(&w.selection)));
                let _ = writeln!(
                    out,
                    "certifying subgame:\n{}",
                    indent(&crate::games::write_game(&w.subgame))
                );
            }
            Some(Witness::Gen {
                witness,
                interval_payoff,
            }) => {
                let _ = writeln!(out, "l = {}\nu = {}", witness.l, witness.u);
                let _ = writeln!(out, "interval core element: {interval_payoff}");
            }
            Some(Witness::GenFailure { failing_rows }) => {
                let _ = writeln!(out, "infeasible rows:");
                for row in failing_rows {
                    let _ = writeln!(out, "  {row}");
                }
            }
        }
        out
    }
}

fn selection_text(v: &ClassicalGame) -> String {
    crate::games::write_game(&v.embed())
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

#[derive(Clone, Debug, Serialize)]
pub struct CoincidenceReport {
    pub source: String,
    #[serde(flatten)]
    pub verdict: CoincidenceVerdict,
}

impl CoincidenceReport {
    pub fn text(&self) -> String {
        let v = &self.verdict;
        let mut out = format!("game {}: {} selection core vertices\n", self.source, v.vertices);
        if v.coincident {
            out.push_str("coincident\n");
        } else {
            out.push_str("NOT coincident\n");
            if let Some(c) = &v.counterexample {
                let _ = writeln!(out, "counterexample: {c}");
            }
            out.push_str("infeasible rows:\n");
            for row in &v.failing_rows {
                let _ = writeln!(out, "  {row}");
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrongReport {
    pub source: String,
    pub grand_degenerate: bool,
    pub strong_imputation: Option<PayoffVector>,
    pub strong_core: Option<PayoffVector>,
    pub strong_core_vertices: Vec<PayoffVector>,
    pub strongly_balanced: bool,
    /// Core element of the selection with upper endpoints off `N` and
    /// `w̲(N)` on `N`.
    pub worst_selection_core: Option<PayoffVector>,
}

impl StrongReport {
    pub fn text(&self) -> String {
        let show = |x: &Option<PayoffVector>| match x {
            Some(x) => format!("nonempty, e.g. {x}"),
            None => "empty".to_string(),
        };
        let mut out = format!("game {}\n", self.source);
        let _ = writeln!(out, "  grand coalition degenerate: {}", self.grand_degenerate);
        let _ = writeln!(out, "  strong imputations: {}", show(&self.strong_imputation));
        let _ = writeln!(out, "  strong core: {}", show(&self.strong_core));
        for v in &self.strong_core_vertices {
            let _ = writeln!(out, "    vertex {v}");
        }
        let _ = writeln!(out, "  strongly balanced: {}", self.strongly_balanced);
        out
    }
}

/// One characterization compared with its oracle.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub check: String,
    pub characterization: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub source: String,
    pub checks: Vec<OracleCheck>,
    pub disagreements: usize,
}

impl OracleReport {
    pub fn from_checks(source: String, checks: Vec<OracleCheck>) -> Self {
        let disagreements = checks.iter().filter(|c| c.characterization != c.oracle).count();
        OracleReport {
            source,
            checks,
            disagreements,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("game {}\n", self.source);
        for c in &self.checks {
            let mark = if c.characterization == c.oracle {
                "agree"
            } else {
                "DISAGREE"
            };
            let _ = writeln!(
                out,
                "  {mark} {}: characterization={} oracle={}",
                c.check, c.characterization, c.oracle
            );
        }
        out
    }
}
