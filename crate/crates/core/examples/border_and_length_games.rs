//! Border games, the length game and selections of an interval game.
//!
//! ```bash
//! cargo run --example border_and_length_games
//! ```

use intgames::games::{parse_game, Coalition};

fn main() -> Result<(), intgames::error::Error> {
    let w = parse_game(
        "players 3
         1 [0, 1]
         2 [0, 2]
         3 [1, 1]
         1,2 [2, 4]
         1,3 [1, 3]
         2,3 [2, 3]
         1,2,3 [5, 8]",
    )?;

    let (lower, upper) = w.border_games();
    let length = w.length_game();
    println!("{:<10} {:>6} {:>6} {:>6}", "coalition", "lower", "upper", "length");
    for s in Coalition::nonempty(3) {
        println!(
            "{:<10} {:>6} {:>6} {:>6}",
            s.to_string(),
            lower.worth(s).to_string(),
            upper.worth(s).to_string(),
            length.worth(s).to_string()
        );
    }

    let mid = w.midpoint_selection();
    println!("midpoint selection is a selection: {}", w.is_selection(&mid));
    println!("v(N) of the midpoint selection: {}", mid.worth(w.grand()));
    println!("degenerate: {}", w.is_degenerate());
    println!("after collapsing w(N): {}", w.truncate_grand().worth(w.grand()));
    Ok(())
}
