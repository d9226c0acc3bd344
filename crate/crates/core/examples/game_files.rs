//! Reading and writing the line-oriented game file format.
//!
//! ```bash
//! cargo run --example game_files
//! ```

use intgames::games::{family, parse_game, write_game, FamilyKind, GameFile};

fn main() {
    let text = "# two players, sparse order is fine\n\
                players 2\n\
                {1,2} [1, 4]\n\
                2 [1, 3]\n\
                1 [1, 3]\n";
    let w = parse_game(text).expect("valid file");
    let canonical = write_game(&w);
    print!("{canonical}");
    assert_eq!(parse_game(&canonical).expect("round trip"), w);

    let file: GameFile = write_game(&family(FamilyKind::SelectionConvex, 2).unwrap())
        .parse()
        .unwrap();
    println!("entries in the sel-convex file: {}", file.entries.len());

    for bad in [
        "players 2\n1 [0, 1]\n1 [0, 1]\n2 0\n1,2 1\n",
        "players 2\n1 [2, 1]\n2 0\n1,2 1\n",
        "players 2\n1 0\n1,2 1\n",
    ] {
        println!("error: {}", parse_game(bad).unwrap_err());
    }
}
