//! Strong imputations, the strong core and strong balancedness.
//!
//! ```bash
//! cargo run --example strong_core
//! ```

use intgames::games::{parse_game, PayoffVector};
use intgames::solutions::{
    gen_membership, is_strong_core_member, is_strongly_balanced, strong_core_nonempty, strong_core_vertices,
    strong_imputation_nonempty, GenWitness,
};

fn main() -> Result<(), intgames::error::Error> {
    let w = parse_game(
        "players 3
         1 [0, 1]
         2 [0, 1]
         3 [0, 1]
         1,2 [0, 2]
         1,3 [0, 2]
         2,3 [0, 2]
         1,2,3 3",
    )?;
    println!("strong imputation: {:?}", strong_imputation_nonempty(&w));
    let c = strong_core_nonempty(&w).expect("upper game has a core element");
    println!("strong core element: {c}");
    for v in strong_core_vertices(&w)?.vertices() {
        println!("  vertex {}", PayoffVector::new(v.clone()));
    }
    let zero: PayoffVector = "0,0,0".parse()?;
    let witness = GenWitness {
        l: zero.clone(),
        u: zero,
    };
    println!("generated with l = u = 0: {}", witness.verify(&w, &c));
    println!("generated (solver): {}", gen_membership(&w, &c)?.is_some());
    println!("strongly balanced: {}", is_strongly_balanced(&w));

    let loose = parse_game("players 2\n1 0\n2 0\n1,2 [1, 2]\n")?;
    println!(
        "w(N) = [1, 2]: strong core member (1, 0)? {}; strongly balanced? {}",
        is_strong_core_member(&loose, &"1,0".parse()?)?,
        is_strongly_balanced(&loose)
    );
    Ok(())
}
