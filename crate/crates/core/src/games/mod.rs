//! Classical and interval games, payoff vectors, derived games and the named
//! game families.

mod coalition;
mod family;
mod format;
mod game;
mod payoff;
pub mod random;

pub(crate) use coalition::check_players;
pub use coalition::{Coalition, MAX_PLAYERS};
pub use family::{family, FamilyKind};
pub use format::{parse_classical_game, parse_game, write_game, GameFile, GameFileEntry};
pub use game::{ClassicalGame, IntervalGame};
pub use payoff::{IntervalPayoffVector, PayoffVector};
