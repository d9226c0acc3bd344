//! The family games separating selection classes from the earlier
//! interval classes.
//!
//! ```bash
//! cargo run --example relation_witnesses
//! ```

use intgames::classes::{check_interval_class, check_selection_class, IntervalClass, SelectionClass};
use intgames::games::{family, FamilyKind, IntervalGame};

fn row(name: &str, w: &IntervalGame) {
    println!(
        "{name:<26} n={} SeSIG={:<5} SIG={:<5} SeCIG={:<5} CIG={:<5}",
        w.players(),
        check_selection_class(w, SelectionClass::SelectionSuperadditive),
        check_interval_class(w, IntervalClass::SuperadditiveInterval),
        check_selection_class(w, SelectionClass::SelectionConvex),
        check_interval_class(w, IntervalClass::ConvexInterval),
    );
}

fn main() -> Result<(), intgames::error::Error> {
    for n in 2..=4 {
        row("sel-superadditive", &family(FamilyKind::SelectionSuperadditive, n)?);
        row("interval-superadditive", &family(FamilyKind::IntervalSuperadditive, n)?);
        let secig = family(FamilyKind::SelectionConvex, n)?;
        row("sel-convex", &secig);
        row("sel-convex, w(N) collapsed", &secig.truncate_grand());
    }
    // The sel-convex family has length game 1 on every nonempty coalition,
    // so |w|({1}) + |w|({2}) = 2 > 1 = |w|({1,2}) + |w|(∅).
    let w = family(FamilyKind::SelectionConvex, 2)?;
    println!("length game of sel-convex, n=2: {:?}", w.length_game().values());
    Ok(())
}
