use thiserror::Error;

/// Errors raised by the library and surfaced by the command-line front-end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: &'static str },

    #[error("invalid interval [{lower}, {upper}]: lower endpoint exceeds upper endpoint")]
    InvertedInterval { lower: String, upper: String },

    #[error("invalid interval {text:?}: {reason}")]
    ParseInterval { text: String, reason: String },

    #[error("interval division by {divisor}, which contains zero")]
    DivisionByZero { divisor: String },

    #[error("player count {0} is outside the supported range 1..=16")]
    PlayerCount(usize),

    #[error("{what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("the empty coalition must be worth zero")]
    NonzeroEmptyCoalition,

    #[error("line {line}: {message}")]
    GameFile { line: usize, message: String },

    #[error("invalid family request: {0}")]
    Family(String),

    #[error("{operation} supports at most {budget} players, game has {players}")]
    Budget {
        operation: &'static str,
        players: usize,
        budget: usize,
    },

    #[error("linear system is malformed: {0}")]
    MalformedSystem(String),

    #[error("feasible region is unbounded")]
    Unbounded,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
