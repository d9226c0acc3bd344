use intgames::games::{parse_game, random, write_game, ClassicalGame, IntervalGame, PayoffVector};
use intgames::numerics::{Interval, Scalar};
use intgames::solutions::{core_coincidence, gen_membership, is_selection_core_member, DEFAULT_COINCIDENCE_BUDGET};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_send_sync<T: Send + Sync>() {}

#[test]
fn public_types_are_thread_safe() {
    assert_send_sync::<Scalar>();
    assert_send_sync::<Interval>();
    assert_send_sync::<ClassicalGame>();
    assert_send_sync::<IntervalGame>();
    assert_send_sync::<PayoffVector>();
    assert_send_sync::<intgames::error::Error>();
    assert_send_sync::<intgames::lpcore::LinearSystem>();
    assert_send_sync::<intgames::solutions::CoincidenceVerdict>();
}

#[test]
fn games_can_be_analysed_on_worker_threads() {
    let handles: Vec<_> = (0..4u64)
        .map(|seed| {
            std::thread::spawn(move || {
                let w = random::interval_game(&mut ChaCha8Rng::seed_from_u64(seed), 3);
                core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET).map(|v| v.vertices)
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap().unwrap();
    }
}

#[test]
fn wrong_length_vectors_are_errors() {
    let w = parse_game("players 2\n1 0\n2 0\n1,2 1\n").unwrap();
    let x: PayoffVector = "1,0,0".parse().unwrap();
    assert!(is_selection_core_member(&w, &x).is_err());
    assert!(gen_membership(&w, &x).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn write_then_parse_is_identity(seed in any::<u64>(), n in 1usize..=5, structured in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = if structured {
            random::structured_interval_game(&mut rng, n)
        } else {
            random::interval_game(&mut rng, n)
        };
        let text = write_game(&w);
        prop_assert_eq!(parse_game(&text).unwrap(), w);
        prop_assert_eq!(write_game(&parse_game(&text).unwrap()), text);
    }

    #[test]
    fn payoff_vectors_round_trip_through_text(values in prop::collection::vec((-50i64..50, 1i64..7), 1..6)) {
        let x: PayoffVector = values.iter().map(|&(p, q)| Scalar::from_ratio(p, q).unwrap()).collect();
        let text = x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(text.parse::<PayoffVector>().unwrap(), x);
    }

    #[test]
    fn intervals_round_trip_through_text(a in -40i64..40, b in 1i64..9, d in 0i64..40) {
        let lo = Scalar::from_ratio(a, b).unwrap();
        let iv = Interval::new(lo.clone(), lo + Scalar::from_ratio(d, b).unwrap()).unwrap();
        prop_assert_eq!(iv.to_string().parse::<Interval>().unwrap(), iv);
    }
}
