use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::games::{family, random, Coalition, FamilyKind};
use crate::numerics::{Interval, Scalar};

fn majority3() -> ClassicalGame {
    ClassicalGame::from_fn(3, |s| Scalar::from(u32::from(s.len() >= 2))).unwrap()
}

#[test]
fn majority_game_is_monotonic_superadditive_not_convex() {
    let v = majority3();
    assert!(check_classical(&v, ClassicalProperty::Monotonic));
    assert!(check_classical(&v, ClassicalProperty::Superadditive));
    assert!(!check_classical(&v, ClassicalProperty::Additive));
    assert!(!check_classical(&v, ClassicalProperty::Convex));
}

#[test]
fn additive_game_has_every_property() {
    let v = ClassicalGame::additive(&[Scalar::from(1), Scalar::from(2), Scalar::from(5)]).unwrap();
    for p in ClassicalProperty::ALL {
        assert!(check_classical(&v, p), "{p}");
    }
    let negative = ClassicalGame::additive(&[Scalar::from(-1), Scalar::from(2)]).unwrap();
    assert!(!check_classical(&negative, ClassicalProperty::Monotonic));
    assert!(check_classical(&negative, ClassicalProperty::Convex));
}

#[test]
fn family_verdicts() {
    for n in 2..=4 {
        let sesig = family(FamilyKind::SelectionSuperadditive, n).unwrap();
        assert!(check_selection_class(&sesig, SelectionClass::SelectionSuperadditive));
        assert!(!check_interval_class(&sesig, IntervalClass::SuperadditiveInterval));

        let sig = family(FamilyKind::IntervalSuperadditive, n).unwrap();
        assert!(check_interval_class(&sig, IntervalClass::SuperadditiveInterval));
        assert!(!check_selection_class(&sig, SelectionClass::SelectionSuperadditive));
        assert!(check_interval_class(&sig, IntervalClass::ConvexInterval));
        assert!(!check_selection_class(&sig, SelectionClass::SelectionConvex));

        let secig = family(FamilyKind::SelectionConvex, n).unwrap();
        assert!(check_selection_class(&secig, SelectionClass::SelectionConvex));
        assert!(check_interval_class(&secig, IntervalClass::SupermodularInterval));
        // Length game is 1 on every nonempty coalition, which is not convex.
        assert!(!check_interval_class(&secig, IntervalClass::ConvexInterval));

        let truncated = secig.truncate_grand();
        assert!(check_selection_class(&truncated, SelectionClass::SelectionConvex));
        assert!(!check_interval_class(&truncated, IntervalClass::ConvexInterval));
    }
}

#[test]
fn degenerate_convex_games_are_in_both_convex_classes() {
    for n in 2..=4 {
        let w = ClassicalGame::from_fn(n, |s| Scalar::from((s.len() * s.len()) as u32))
            .unwrap()
            .embed();
        assert!(check_selection_class(&w, SelectionClass::SelectionConvex));
        assert!(check_interval_class(&w, IntervalClass::ConvexInterval));
    }
}

#[test]
fn degenerate_superadditive_game_is_in_both_superadditive_classes() {
    let w = majority3().embed();
    assert!(check_selection_class(&w, SelectionClass::SelectionSuperadditive));
    assert!(check_interval_class(&w, IntervalClass::SuperadditiveInterval));
    assert!(!check_selection_class(&w, SelectionClass::SelectionConvex));
}

#[test]
fn selection_monotonic_but_not_size_monotonic() {
    // |w|({1}) = 2 > |w|(N) = 0.
    let w = IntervalGame::from_fn(2, |s| match s.len() {
        1 => Interval::new(Scalar::zero(), Scalar::from(2)).unwrap(),
        _ => Interval::point(Scalar::from(5)),
    })
    .unwrap();
    assert!(check_selection_class(&w, SelectionClass::SelectionMonotonic));
    assert!(!check_interval_class(&w, IntervalClass::SizeMonotonic));
}

#[test]
fn oracle_rejects_large_games() {
    let w = family(FamilyKind::SelectionConvex, 5).unwrap();
    assert!(matches!(
        selection_class_oracle(&w, SelectionClass::SelectionConvex),
        Err(Error::Budget {
            players: 5,
            budget: 4,
            ..
        })
    ));
}

#[test]
fn oracle_reports_a_violating_selection() {
    let w = family(FamilyKind::IntervalSuperadditive, 2).unwrap();
    let verdict = selection_class_oracle(&w, SelectionClass::SelectionSuperadditive).unwrap();
    assert!(!verdict.holds);
    let s = verdict.violating_selection.unwrap();
    assert!(w.is_selection(&s));
    assert!(!check_classical(&s, ClassicalProperty::Superadditive));
}

#[test]
fn cross_check_flags_a_wrong_characterization() {
    let w = family(FamilyKind::IntervalSuperadditive, 3).unwrap();
    assert!(cross_check(&w, check_selection_class).unwrap().is_empty());
    let wrong = cross_check(&w, |_, _| true).unwrap();
    assert_eq!(
        wrong.iter().map(|d| d.class).collect::<Vec<_>>(),
        [
            SelectionClass::SelectionMonotonic,
            SelectionClass::SelectionSuperadditive,
            SelectionClass::SelectionConvex
        ]
    );
}

#[test]
fn oracle_agrees_on_four_player_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..6 {
        let w = random::structured_interval_game(&mut rng, 4);
        assert!(cross_check(&w, check_selection_class).unwrap().is_empty());
    }
}

#[test]
fn classification_is_consistent_with_single_checks() {
    let w = family(FamilyKind::SelectionSuperadditive, 3).unwrap();
    let c = classify(&w);
    for class in SelectionClass::ALL {
        assert_eq!(c.selection_class(class), check_selection_class(&w, class));
    }
    for class in IntervalClass::ALL {
        assert_eq!(c.interval_class(class), check_interval_class(&w, class));
    }
    assert_eq!(c.selection_convex_variants.len(), 3);
}

fn game_strategy(max_players: usize) -> impl Strategy<Value = IntervalGame> {
    (1..=max_players, any::<u64>(), any::<bool>()).prop_map(|(n, seed, structured)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if structured {
            random::structured_interval_game(&mut rng, n)
        } else {
            random::interval_game(&mut rng, n)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn characterizations_match_oracle(w in game_strategy(3)) {
        prop_assert!(cross_check(&w, check_selection_class).unwrap().is_empty());
    }

    #[test]
    fn convex_variants_agree(w in game_strategy(4)) {
        let pairs = check_selection_convex_variant(&w, ConvexVariant::IncomparablePairs);
        prop_assert_eq!(pairs, check_selection_convex_variant(&w, ConvexVariant::MarginalGain));
        prop_assert_eq!(pairs, check_selection_convex_variant(&w, ConvexVariant::SinglePlayerGain));
    }

    #[test]
    fn selection_convex_implies_selection_superadditive(w in game_strategy(4)) {
        if check_selection_class(&w, SelectionClass::SelectionConvex) {
            prop_assert!(check_selection_class(&w, SelectionClass::SelectionSuperadditive));
        }
    }

    #[test]
    fn convex_interval_implies_supermodular(w in game_strategy(4)) {
        if check_interval_class(&w, IntervalClass::ConvexInterval) {
            prop_assert!(check_interval_class(&w, IntervalClass::SupermodularInterval));
        }
    }

    #[test]
    fn random_selections_inherit_the_class(w in game_strategy(4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for class in SelectionClass::ALL {
            if check_selection_class(&w, class) {
                for _ in 0..4 {
                    let v = random::interior_selection(&mut rng, &w);
                    prop_assert!(check_classical(&v, class.property()));
                }
            }
        }
    }

    #[test]
    fn degenerate_games_collapse(seed in any::<u64>(), n in 1usize..=4) {
        let v = random::classical_game(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let w = v.embed();
        for class in SelectionClass::ALL {
            prop_assert_eq!(check_selection_class(&w, class), check_classical(&v, class.property()));
        }
        prop_assert!(check_interval_class(&w, IntervalClass::SizeMonotonic));
        prop_assert_eq!(
            check_interval_class(&w, IntervalClass::ConvexInterval),
            check_classical(&v, ClassicalProperty::Convex)
        );
        prop_assert_eq!(
            check_interval_class(&w, IntervalClass::SuperadditiveInterval),
            check_classical(&v, ClassicalProperty::Superadditive)
        );
    }

    #[test]
    fn singleton_coalitions_never_break_monotonicity_checks(seed in any::<u64>()) {
        let v = random::classical_game(&mut ChaCha8Rng::seed_from_u64(seed), 1);
        let expected = !v.worth(Coalition::grand(1)).is_negative();
        prop_assert_eq!(check_classical(&v, ClassicalProperty::Monotonic), expected);
    }
}
