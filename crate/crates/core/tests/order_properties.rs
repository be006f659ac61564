mod common;

use std::cmp::Ordering;

use braidcert::braid::full_twist_power;
use braidcert::dehornoy::{compare, dehornoy_floor, sigma_sign, OrderSign};
use common::{arb_word, random_positive_word, random_word, scramble};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn antisymmetric(m in 2usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_word(&mut rng, m, 20);
        let v = random_word(&mut rng, m, 20);
        prop_assert_eq!(compare(&u, &v).unwrap(), compare(&v, &u).unwrap().reverse());
        prop_assert_eq!(compare(&u, &u).unwrap(), Ordering::Equal);
    }

    #[test]
    fn transitive(m in 2usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut xs = [random_word(&mut rng, m, 15), random_word(&mut rng, m, 15), random_word(&mut rng, m, 15)];
        xs.sort_by(|a, b| compare(a, b).unwrap());
        prop_assert_ne!(compare(&xs[0], &xs[2]).unwrap(), Ordering::Greater);
        if compare(&xs[0], &xs[1]).unwrap() == Ordering::Less {
            prop_assert_eq!(compare(&xs[0], &xs[2]).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn left_invariant(m in 3usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_word(&mut rng, m, 15);
        let v = random_word(&mut rng, m, 15);
        let x = random_word(&mut rng, m, 10);
        let x2 = scramble(&mut rng, &x, 6);
        let lhs = compare(&x.compose(&u).unwrap(), &x2.compose(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, compare(&u, &v).unwrap());
    }

    #[test]
    fn positive_words_are_positive(m in 2usize..6, len in 1usize..30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_positive_word(&mut rng, m, len);
        prop_assert_eq!(sigma_sign(&p).unwrap(), OrderSign::Positive);
        prop_assert_eq!(sigma_sign(&p.inverse()).unwrap(), OrderSign::Negative);
    }

    #[test]
    fn floor_is_inverse_invariant_and_twist_additive(u in arb_word(3, 12), d in 0i64..4) {
        let f = dehornoy_floor(&u).unwrap();
        prop_assert_eq!(dehornoy_floor(&u.inverse()).unwrap(), f);
        let shifted = full_twist_power(3, d).unwrap().compose(&u).unwrap();
        let g = dehornoy_floor(&shifted).unwrap() as i64;
        prop_assert!((g - d).abs() <= f as i64 + 2, "floor {} vs d {} + floor {}", g, d, f);
    }
}
