//! Deciding whether the interval core generates the whole selection core,
//! plus the box property of generated vectors.
//!
//! ```bash
//! cargo run --example core_coincidence
//! ```

use intgames::games::{parse_game, random, PayoffVector};
use intgames::numerics::Scalar;
use intgames::solutions::{
    core_coincidence, gen_membership, selection_core_vertices, GenWitness, DEFAULT_COINCIDENCE_BUDGET,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), intgames::error::Error> {
    let games = [
        ("worked example", "players 2\n1 [1, 3]\n2 [1, 3]\n1,2 [1, 4]\n"),
        ("unit pair", "players 2\n1 [0, 1]\n2 [0, 1]\n1,2 [0, 2]\n"),
        ("degenerate", "players 2\n1 1\n2 1\n1,2 3\n"),
    ];
    for (name, text) in games {
        let w = parse_game(text)?;
        let vertices = selection_core_vertices(&w)?;
        let verdict = core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET)?;
        let listed: Vec<String> = vertices
            .vertices()
            .iter()
            .map(|v| PayoffVector::new(v.clone()).to_string())
            .collect();
        println!("{name}: vertices {}", listed.join(" "));
        match verdict.counterexample {
            Some(c) => println!("  not coincident, first failing vertex {c}"),
            None => println!("  coincident"),
        }
    }

    // Between two generated vectors q <= r every x is generated, with
    // l = (x - q) + l(q) and u = (r - x) + u(r).
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let w = random::additive_border_game(&mut rng, 3);
    let q: PayoffVector = (0..3)
        .map(|i| w.lower(intgames::games::Coalition::singleton(i)).clone())
        .collect();
    let gq = gen_membership(&w, &q)?.expect("lower vector is generated");
    let r: PayoffVector = q.iter().zip(gq.u.iter()).map(|(a, b)| a + b).collect();
    let gr = gen_membership(&w, &r)?.expect("upper vector is generated");
    let half = Scalar::from_ratio(1, 2)?;
    let x: PayoffVector = q.iter().zip(r.iter()).map(|(a, b)| a + (b - a) * &half).collect();
    let built = GenWitness {
        l: x.iter()
            .zip(q.iter().zip(gq.l.iter()))
            .map(|(x, (q, l))| x - q + l)
            .collect(),
        u: r.iter()
            .zip(x.iter().zip(gr.u.iter()))
            .map(|(r, (x, u))| r - x + u)
            .collect(),
    };
    println!(
        "box property: q = {q}, r = {r}, x = {x}, witness verifies: {}",
        built.verify(&w, &x)
    );
    Ok(())
}
