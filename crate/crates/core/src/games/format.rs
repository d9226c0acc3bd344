//! Line-oriented text format for interval games.
//!
//! ```text
//! # comments run to the end of the line
//! players 2
//! 1 [1, 3]
//! 2 [1, 3]
//! 1,2 [1, 4]
//! ```
//!
//! Every nonempty coalition appears exactly once, written as its 1-based
//! players separated by commas. The empty coalition is implied `[0, 0]`. A
//! bare scalar stands for a degenerate interval. Canonical output lists
//! coalitions by bitmask value with sorted players and bracketed intervals.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::games::{check_players, ClassicalGame, Coalition, IntervalGame};
use crate::numerics::{Interval, Scalar};

/// One coalition line of a game file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameFileEntry {
    pub coalition: Coalition,
    pub worth: Interval,
}

/// Parsed game file, entries in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameFile {
    pub players: usize,
    pub entries: Vec<GameFileEntry>,
}

fn line_error(line: usize, message: impl Into<String>) -> Error {
    Error::GameFile {
        line,
        message: message.into(),
    }
}

fn parse_coalition(text: &str, players: usize, line: usize) -> Result<Coalition, Error> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(&compact);
    if body.is_empty() {
        return Err(line_error(
            line,
            "the empty coalition is implied and must not be listed",
        ));
    }
    let mut coalition = Coalition::EMPTY;
    for token in body.split(',') {
        let player: usize = token
            .parse()
            .map_err(|_| line_error(line, format!("invalid player label {token:?}")))?;
        if player == 0 || player > players {
            return Err(line_error(line, format!("player {player} is outside 1..={players}")));
        }
        if coalition.contains(player - 1) {
            return Err(line_error(line, format!("player {player} listed twice")));
        }
        coalition = coalition.with(player - 1);
    }
    Ok(coalition)
}

fn parse_worth(text: &str, line: usize) -> Result<Interval, Error> {
    let text = text.trim();
    let result = if text.starts_with('[') {
        text.parse::<Interval>()
    } else {
        text.parse::<Scalar>().map(Interval::point)
    };
    result.map_err(|err| line_error(line, err.to_string()))
}

impl FromStr for GameFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut players: Option<usize> = None;
        let mut slots: Vec<Option<Interval>> = Vec::new();
        let mut last_line = 0;

        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some(n) = players else {
                let mut words = content.split_whitespace();
                let (Some("players"), Some(count), None) = (words.next(), words.next(), words.next()) else {
                    return Err(line_error(line, "expected header `players <n>`"));
                };
                let n: usize = count
                    .parse()
                    .map_err(|_| line_error(line, format!("invalid player count {count:?}")))?;
                check_players(n).map_err(|err| line_error(line, err.to_string()))?;
                players = Some(n);
                slots = vec![None; 1 << n];
                continue;
            };
            let (coalition_text, worth_text) = match content.find('[') {
                Some(at) => content.split_at(at),
                None => content
                    .rsplit_once(char::is_whitespace)
                    .ok_or_else(|| line_error(line, "expected `<players> <worth>`"))?,
            };
            let coalition = parse_coalition(coalition_text, n, line)?;
            let worth = parse_worth(worth_text, line)?;
            let slot = &mut slots[coalition.index()];
            if slot.is_some() {
                return Err(line_error(line, format!("coalition {coalition} listed twice")));
            }
            *slot = Some(worth);
        }

        let players = players.ok_or_else(|| line_error(last_line.max(1), "missing header `players <n>`"))?;
        let mut entries = Vec::with_capacity(slots.len() - 1);
        for coalition in Coalition::nonempty(players) {
            let worth = slots[coalition.index()]
                .take()
                .ok_or_else(|| line_error(last_line, format!("coalition {coalition} is missing")))?;
            entries.push(GameFileEntry { coalition, worth });
        }
        Ok(GameFile { players, entries })
    }
}

impl fmt::Display for GameFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "players {}", self.players)?;
        for entry in &self.entries {
            let labels: Vec<String> = entry.coalition.members().map(|i| (i + 1).to_string()).collect();
            writeln!(f, "{} {}", labels.join(","), entry.worth)?;
        }
        Ok(())
    }
}

impl GameFile {
    pub fn from_game(game: &IntervalGame) -> Self {
        GameFile {
            players: game.players(),
            entries: Coalition::nonempty(game.players())
                .map(|coalition| GameFileEntry {
                    coalition,
                    worth: game.worth(coalition).clone(),
                })
                .collect(),
        }
    }

    pub fn to_game(&self) -> Result<IntervalGame, Error> {
        let mut worth = vec![Interval::zero(); 1 << self.players];
        for entry in &self.entries {
            worth[entry.coalition.index()] = entry.worth.clone();
        }
        IntervalGame::new(self.players, worth)
    }
}

/// Parses an interval game from the text format.
pub fn parse_game(text: &str) -> Result<IntervalGame, Error> {
    text.parse::<GameFile>()?.to_game()
}

/// Parses a classical game; every entry must be degenerate.
pub fn parse_classical_game(text: &str) -> Result<ClassicalGame, Error> {
    let file: GameFile = text.parse()?;
    if let Some(entry) = file.entries.iter().find(|e| !e.worth.is_degenerate()) {
        return Err(Error::GameFile {
            line: 0,
            message: format!(
                "coalition {} has non-degenerate worth {} in a classical game",
                entry.coalition, entry.worth
            ),
        });
    }
    Ok(file.to_game()?.lower_game())
}

/// Canonical text form of an interval game.
pub fn write_game(game: &IntervalGame) -> String {
    GameFile::from_game(game).to_string()
}
