//! Selection core membership with its witnesses, and why a point may still
//! fail to be generated by the interval core.
//!
//! ```bash
//! cargo run --example selection_core
//! ```

use intgames::games::{parse_game, write_game, PayoffVector};
use intgames::solutions::{gen_failing_rows, gen_membership, is_core_member, selection_core_witness};

fn main() -> Result<(), intgames::error::Error> {
    let w = parse_game("players 2\n1 [1, 3]\n2 [1, 3]\n1,2 [1, 4]\n")?;

    for text in ["2,2", "3,1", "0,0"] {
        let x: PayoffVector = text.parse()?;
        match selection_core_witness(&w, &x)? {
            Some(witness) => {
                println!("{x} is in the selection core");
                println!(
                    "  core element of a selection: {}",
                    is_core_member(&witness.selection, &x)?
                );
                println!("  certifying subgame:\n{}", write_game(&witness.subgame).trim_end());
            }
            None => println!("{x} is not in the selection core"),
        }
        match gen_membership(&w, &x)? {
            Some(g) => println!("  generated: l = {}, u = {}, I = {}", g.l, g.u, g.interval_payoff(&x)),
            None => {
                println!("  not generated; these rows conflict:");
                for row in gen_failing_rows(&w, &x)?.unwrap_or_default() {
                    println!("    {row}");
                }
            }
        }
    }
    Ok(())
}
