//! Command-line front-end.
//!
//! [`run`] parses arguments, reads game files (or standard input for `-`),
//! and writes a text or JSON report. Exit status: 0 on success, 1 when a
//! query answers false or an oracle disagrees, 2 on input errors, 3 when a
//! budget is exceeded.

pub mod report;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classes::{check_selection_class, classify, selection_class_oracle, SelectionClass, ORACLE_BUDGET};
use crate::error::Error;
use crate::games::{
    family, parse_classical_game, parse_game, random, write_game, ClassicalGame, FamilyKind, IntervalGame,
    IntervalPayoffVector, PayoffVector,
};
use crate::solutions::oracle::{
    selection_core_oracle, strong_core_oracle, strongly_balanced_oracle, BALANCED_ORACLE_BUDGET,
};
use crate::solutions::{
    core_coincidence, gen_failing_rows, gen_membership, is_core_member, is_imputation, is_interval_core_member,
    is_interval_imputation, is_selection_core_member, is_strong_core_member, is_strong_imputation,
    is_strongly_balanced, selection_core_vertices, selection_core_witness, selection_imputation_witness,
    strong_core_nonempty, strong_core_vertices, strong_imputation_nonempty, strongly_balanced_witness,
    DEFAULT_COINCIDENCE_BUDGET,
};
use report::{ClassifyReport, CoincidenceReport, MembershipReport, OracleCheck, OracleReport, StrongReport, Witness};

#[derive(Parser, Debug)]
#[command(
    name = "intgames",
    version,
    about = "Selection-based analysis of cooperative interval games"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report every class verdict for one or more game files.
    Classify {
        #[arg(default_value = "-")]
        files: Vec<PathBuf>,
    },
    /// Test a payoff vector against a solution concept.
    Membership {
        #[arg(long, value_enum)]
        concept: Concept,
        /// Payoff vector, e.g. `2,2` or `1/2,3`; interval concepts take
        /// `[1, 2] [0, 1]`.
        #[arg(long = "x", allow_hyphen_values = true)]
        x: String,
        /// Selection for classical concepts: `lower`, `upper` or a classical
        /// game file.
        #[arg(long)]
        selection: Option<String>,
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Decide whether the interval core generates the selection core.
    Coincidence {
        /// Largest number of players to attempt.
        #[arg(long, default_value_t = DEFAULT_COINCIDENCE_BUDGET)]
        budget: usize,
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Report strong imputations, the strong core and strong balancedness.
    Strong {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Write a named family game in the game file format.
    Family {
        #[arg(value_parser = parse_family)]
        kind: FamilyKind,
        players: usize,
    },
    /// Compare characterizations with brute-force oracles.
    Oracle {
        /// Game file; ignored when `--random` is given.
        file: Option<PathBuf>,
        /// Number of seeded random games to check instead of a file.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        players: usize,
    },
}

fn parse_family(text: &str) -> Result<FamilyKind, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Concept {
    Imputation,
    Core,
    SelImputation,
    SelCore,
    Gen,
    IntervalImputation,
    IntervalCore,
    StrongImputation,
    StrongCore,
}

/// Failure of a command, mapped to an exit status.
#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<(String, String), Failure> {
        if path.as_os_str() == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
            Ok(("-".to_string(), text))
        } else {
            let name = path.display().to_string();
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
            Ok((name, text))
        }
    }

    fn game(&mut self, path: &PathBuf) -> Result<(String, IntervalGame), Failure> {
        let (name, text) = self.read(path)?;
        let game = parse_game(&text).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
        Ok((name, game))
    }

    fn emit<T: Serialize>(&mut self, doc: &T, text: impl FnOnce(&T) -> String) -> Result<(), Failure> {
        let out = match self.format {
            Format::Text => text(doc),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
                s.push('\n');
                s
            }
        };
        self.stdout
            .write_all(out.as_bytes())
            .map_err(|e| Failure::Input(format!("standard output: {e}")))
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        format: cli.format,
    };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match command {
        Command::Classify { files } => {
            let mut reports = Vec::new();
            for path in &files {
                let (name, w) = io.game(path)?;
                reports.push(ClassifyReport::new(name, w.players(), &classify(&w)));
            }
            if reports.len() == 1 {
                io.emit(&reports[0], ClassifyReport::text)?;
            } else {
                io.emit(&reports, |rs| {
                    rs.iter().map(ClassifyReport::text).collect::<Vec<_>>().join("\n")
                })?;
            }
            Ok(0)
        }
        Command::Membership {
            concept,
            x,
            selection,
            file,
        } => {
            let (_, w) = io.game(&file)?;
            let report = membership(&w, concept, &x, selection.as_deref(), io)?;
            let code = if report.holds { 0 } else { 1 };
            io.emit(&report, MembershipReport::text)?;
            Ok(code)
        }
        Command::Coincidence { budget, file } => {
            let (name, w) = io.game(&file)?;
            let verdict = core_coincidence(&w, budget)?;
            let code = if verdict.coincident { 0 } else { 1 };
            io.emit(&CoincidenceReport { source: name, verdict }, CoincidenceReport::text)?;
            Ok(code)
        }
        Command::Strong { file } => {
            let (name, w) = io.game(&file)?;
            let report = StrongReport {
                source: name,
                grand_degenerate: w.worth(w.grand()).is_degenerate(),
                strong_imputation: strong_imputation_nonempty(&w),
                strong_core: strong_core_nonempty(&w),
                strong_core_vertices: strong_core_vertices(&w)?
                    .into_vertices()
                    .into_iter()
                    .map(PayoffVector::new)
                    .collect(),
                strongly_balanced: is_strongly_balanced(&w),
                worst_selection_core: strongly_balanced_witness(&w),
            };
            io.emit(&report, StrongReport::text)?;
            Ok(0)
        }
        Command::Family { kind, players } => {
            let w = family(kind, players)?;
            io.emit(&w, write_game)?;
            Ok(0)
        }
        Command::Oracle {
            file,
            random: count,
            seed,
            players,
        } => {
            let games: Vec<(String, IntervalGame)> = match count {
                Some(count) => {
                    crate::games::check_players(players)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..count)
                        .map(|k| {
                            let w = if k % 2 == 0 {
                                random::structured_interval_game(&mut rng, players)
                            } else {
                                random::interval_game(&mut rng, players)
                            };
                            (format!("random #{k} (seed {seed})"), w)
                        })
                        .collect()
                }
                None => vec![io.game(&file.unwrap_or_else(|| PathBuf::from("-")))?],
            };
            let mut reports = Vec::new();
            for (name, w) in games {
                let checks = oracle_checks(&w, check_selection_class)?;
                reports.push(OracleReport::from_checks(name, checks));
            }
            let disagreements: usize = reports.iter().map(|r| r.disagreements).sum();
            if reports.len() == 1 {
                io.emit(&reports[0], OracleReport::text)?;
            } else {
                io.emit(&reports, |rs| {
                    rs.iter().map(OracleReport::text).collect::<Vec<_>>().join("\n")
                })?;
            }
            Ok(if disagreements == 0 { 0 } else { 1 })
        }
    }
}

fn membership(
    w: &IntervalGame,
    concept: Concept,
    x_text: &str,
    selection: Option<&str>,
    io: &mut Io<'_>,
) -> Result<MembershipReport, Failure> {
    let name = concept
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    if matches!(concept, Concept::IntervalImputation | Concept::IntervalCore) {
        let payoff: IntervalPayoffVector = x_text.parse()?;
        let holds = match concept {
            Concept::IntervalImputation => is_interval_imputation(w, &payoff)?,
            _ => is_interval_core_member(w, &payoff)?,
        };
        return Ok(MembershipReport {
            concept: name,
            payoff: payoff.to_string(),
            holds,
            witness: None,
        });
    }
    let x: PayoffVector = x_text.parse()?;
    let (holds, witness) = match concept {
        Concept::Imputation | Concept::Core => {
            let v = classical_selection(w, selection, io)?;
            let holds = if concept == Concept::Imputation {
                is_imputation(&v, &x)?
            } else {
                is_core_member(&v, &x)?
            };
            (holds, None)
        }
        Concept::SelImputation => match selection_imputation_witness(w, &x)? {
            Some(selection) => (true, Some(Witness::Selection { selection })),
            None => (false, None),
        },
        Concept::SelCore => match selection_core_witness(w, &x)? {
            Some(witness) => (true, Some(Witness::SelectionCore(witness))),
            None => (false, None),
        },
        Concept::Gen => match gen_membership(w, &x)? {
            Some(witness) => {
                let interval_payoff = witness.interval_payoff(&x);
                (
                    true,
                    Some(Witness::Gen {
                        witness,
                        interval_payoff,
                    }),
                )
            }
            None => {
                let failing_rows = gen_failing_rows(w, &x)?.expect("x is not generated");
                (false, Some(Witness::GenFailure { failing_rows }))
            }
        },
        Concept::StrongImputation => (is_strong_imputation(w, &x)?, None),
        Concept::StrongCore => (is_strong_core_member(w, &x)?, None),
        Concept::IntervalImputation | Concept::IntervalCore => unreachable!("handled above"),
    };
    Ok(MembershipReport {
        concept: name,
        payoff: x.to_string(),
        holds,
        witness,
    })
}

fn classical_selection(w: &IntervalGame, selection: Option<&str>, io: &mut Io<'_>) -> Result<ClassicalGame, Failure> {
    match selection {
        None => Err(Failure::Input(
            "classical concepts need --selection lower, upper or a game file".into(),
        )),
        Some("lower") => Ok(w.lower_game()),
        Some("upper") => Ok(w.upper_game()),
        Some(path) => {
            let (name, text) = io.read(&PathBuf::from(path))?;
            let v = parse_classical_game(&text).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
            if !w.is_selection(&v) {
                return Err(Failure::Input(format!("{name}: not a selection of the game")));
            }
            Ok(v)
        }
    }
}

/// Side-by-side comparison of characterizations with the brute-force
/// oracles for one game.
///
/// `characterization` decides the selection classes; it is a parameter so
/// that a deliberately wrong one can be shown to be caught. Solution checks
/// compare the selection-core and strong-core closed forms with endpoint
/// enumeration at every selection-core vertex, and strong balancedness for
/// games of at most three players.
pub fn oracle_checks<F>(w: &IntervalGame, characterization: F) -> Result<Vec<OracleCheck>, Error>
where
    F: Fn(&IntervalGame, SelectionClass) -> bool,
{
    if w.players() > ORACLE_BUDGET {
        return Err(Error::Budget {
            operation: "oracle",
            players: w.players(),
            budget: ORACLE_BUDGET,
        });
    }
    let mut checks = Vec::new();
    for class in SelectionClass::ALL {
        checks.push(OracleCheck {
            check: class.to_string(),
            characterization: characterization(w, class),
            oracle: selection_class_oracle(w, class)?.holds,
        });
    }
    let mut points: Vec<PayoffVector> = selection_core_vertices(w)?
        .into_vertices()
        .into_iter()
        .map(PayoffVector::new)
        .collect();
    if let Some(x) = strong_core_nonempty(w) {
        points.push(x);
    }
    for x in &points {
        checks.push(OracleCheck {
            check: format!("selection-core {x}"),
            characterization: is_selection_core_member(w, x)?,
            oracle: selection_core_oracle(w, x)?,
        });
        checks.push(OracleCheck {
            check: format!("strong-core {x}"),
            characterization: is_strong_core_member(w, x)?,
            oracle: strong_core_oracle(w, x)?,
        });
    }
    if w.players() <= BALANCED_ORACLE_BUDGET {
        checks.push(OracleCheck {
            check: "strongly-balanced".into(),
            characterization: is_strongly_balanced(w),
            oracle: strongly_balanced_oracle(w)?,
        });
    }
    Ok(checks)
}
