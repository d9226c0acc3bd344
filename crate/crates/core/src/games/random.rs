//! Seeded random game generators used by the oracle cross-checks.
//!
//! All values are small rationals so that exact arithmetic stays cheap.

use rand::Rng;

use crate::games::{ClassicalGame, Coalition, IntervalGame};
use crate::numerics::{Interval, Scalar};

/// Uniform rational `k / denominator` with `k` drawn from `low..=high`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, low: i64, high: i64, denominator: i64) -> Scalar {
    Scalar::from_ratio(rng.gen_range(low..=high), denominator).expect("nonzero denominator")
}

/// Unstructured game: independent lower endpoints and widths.
pub fn interval_game<R: Rng + ?Sized>(rng: &mut R, players: usize) -> IntervalGame {
    IntervalGame::from_fn(players, |_| {
        let lower = rational(rng, -12, 24, 4);
        let width = if rng.gen_bool(0.2) {
            Scalar::zero()
        } else {
            rational(rng, 0, 12, 4)
        };
        Interval::new(lower.clone(), lower + width).expect("nonnegative width")
    })
    .expect("valid player count")
}

/// Game built around a cardinality-convex base with random widths and
/// perturbations, so that every selection-based class is hit by a sizeable
/// share of draws.
pub fn structured_interval_game<R: Rng + ?Sized>(rng: &mut R, players: usize) -> IntervalGame {
    let steep = rng.gen_range(1..=4i64);
    let jitter = rng.gen_range(0..=3i64);
    let width_cap = rng.gen_range(0..=4i64);
    IntervalGame::from_fn(players, |s| {
        let k = s.len() as i64;
        let base = Scalar::from(steep * k * k);
        let noise = rational(rng, -jitter, jitter, 2);
        let width = rational(rng, 0, width_cap, 2);
        let lower = base + noise;
        Interval::new(lower.clone(), lower + width).expect("nonnegative width")
    })
    .expect("valid player count")
}

/// Classical game with rational worths.
pub fn classical_game<R: Rng + ?Sized>(rng: &mut R, players: usize) -> ClassicalGame {
    if rng.gen_bool(0.5) {
        ClassicalGame::from_fn(players, |_| rational(rng, -8, 24, 3)).expect("valid player count")
    } else {
        structured_interval_game(rng, players).lower_game()
    }
}

/// Game whose interval core contains `[a, a + d]` for random `a` and `d >= 0`.
/// Coalition worths lie below the corresponding sums by random slack.
pub fn balanced_interval_game<R: Rng + ?Sized>(rng: &mut R, players: usize) -> IntervalGame {
    let base: Vec<Scalar> = (0..players).map(|_| rational(rng, 0, 12, 2)).collect();
    let spread: Vec<Scalar> = (0..players).map(|_| rational(rng, 0, 8, 2)).collect();
    let grand = Coalition::grand(players);
    IntervalGame::from_fn(players, |s| {
        let low_sum: Scalar = s.members().map(|i| &base[i]).sum();
        let high_sum: Scalar = s.members().map(|i| &base[i] + &spread[i]).sum();
        if s == grand {
            return Interval::new(low_sum, high_sum).expect("nonnegative spread");
        }
        let lower = low_sum - rational(rng, 0, 6, 2);
        let upper = (high_sum - rational(rng, 0, 6, 2)).max(lower.clone());
        Interval::new(lower, upper).expect("upper clamped above lower")
    })
    .expect("valid player count")
}

/// Game with additive border games `w̲(S) = Σ a_i`, `w̄(S) = Σ b_i`, `a <= b`.
pub fn additive_border_game<R: Rng + ?Sized>(rng: &mut R, players: usize) -> IntervalGame {
    let lower: Vec<Scalar> = (0..players).map(|_| rational(rng, -6, 12, 3)).collect();
    let upper: Vec<Scalar> = lower.iter().map(|a| a + rational(rng, 0, 9, 3)).collect();
    IntervalGame::from_borders(
        &ClassicalGame::additive(&lower).expect("valid player count"),
        &ClassicalGame::additive(&upper).expect("valid player count"),
    )
    .expect("a <= b pointwise")
}

/// Uniformly random selection of `w` with the given denominator grid.
pub fn interior_selection<R: Rng + ?Sized>(rng: &mut R, w: &IntervalGame) -> ClassicalGame {
    ClassicalGame::from_fn(w.players(), |s| {
        let range = w.worth(s);
        let t = rational(rng, 0, 16, 16);
        range.lower() + range.width() * t
    })
    .expect("valid player count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_deterministic_per_seed() {
        let a = interval_game(&mut ChaCha8Rng::seed_from_u64(7), 3);
        let b = interval_game(&mut ChaCha8Rng::seed_from_u64(7), 3);
        assert_eq!(a, b);
    }

    #[test]
    fn interior_selections_are_selections() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let w = structured_interval_game(&mut rng, 3);
            assert!(w.is_selection(&interior_selection(&mut rng, &w)));
        }
    }
}
