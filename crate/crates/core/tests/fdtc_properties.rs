mod common;

use braidcert::braid::full_twist_power;
use braidcert::dehornoy::{dehornoy_floor, ReductionBudget};
use braidcert::fdtc::{fdtc_exact_b3, fdtc_floor_bounds, fdtc_interval, fdtc_lift};
use braidcert::rational::{int, ratio, Rational};
use common::{arb_word, scramble};
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn homogeneous(u in arb_word(3, 12), n in 1i64..6) {
        let c = fdtc_exact_b3(&u).unwrap();
        prop_assert_eq!(fdtc_exact_b3(&u.pow(n).unwrap()).unwrap(), c * int(n));
    }

    #[test]
    fn conjugacy_invariant(u in arb_word(3, 20), x in arb_word(3, 10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let conj = scramble(&mut rng, &u.conjugate_by(&x).unwrap(), 4);
        prop_assert_eq!(fdtc_exact_b3(&conj).unwrap(), fdtc_exact_b3(&u).unwrap());
    }

    #[test]
    fn full_twist_shifts_by_one(u in arb_word(3, 20), d in -4i64..5) {
        let shifted = full_twist_power(3, d).unwrap().compose(&u).unwrap();
        prop_assert_eq!(fdtc_exact_b3(&shifted).unwrap(), fdtc_exact_b3(&u).unwrap() + int(d));
    }

    #[test]
    fn floor_sandwich(u in arb_word(3, 20)) {
        let c = fdtc_exact_b3(&u).unwrap().abs();
        let f = int(dehornoy_floor(&u).unwrap() as i64);
        prop_assert!(f <= c && c <= &f + int(1), "floor {} vs |c| {}", f, c);
    }

    #[test]
    fn floor_enclosure_contains_the_exact_value(u in arb_word(3, 12), k in 1i64..7) {
        let tol = ratio(1, k);
        let v = fdtc_floor_bounds(&u, &tol, &ReductionBudget::default()).unwrap();
        prop_assert!(v.width() <= tol);
        prop_assert!(v.contains(&fdtc_exact_b3(&u).unwrap()), "{} not in {}", fdtc_exact_b3(&u).unwrap(), v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn enclosures_at_finer_tolerance_overlap(u in arb_word(4, 8)) {
        let coarse = fdtc_interval(&u, &ratio(1, 2)).unwrap();
        let fine = fdtc_interval(&u, &ratio(1, 4)).unwrap();
        prop_assert!(coarse.intersect(&fine).is_some(), "{} and {}", coarse, fine);
        prop_assert!(fine.width() <= ratio(1, 4));
    }

    #[test]
    fn four_braid_twist_shift(u in arb_word(4, 6), d in 1i64..3) {
        let tol = ratio(1, 2);
        let base = fdtc_interval(&u, &tol).unwrap();
        let shifted = fdtc_interval(&full_twist_power(4, d).unwrap().compose(&u).unwrap(), &tol).unwrap();
        let moved_lo = base.lo() + int(d);
        let moved_hi = base.hi() + int(d);
        prop_assert!(shifted.hi() >= &moved_lo && shifted.lo() <= &moved_hi, "{} vs {} + {}", shifted, base, d);
    }

    #[test]
    fn lift_is_gcd_homogeneous(num in -50i64..50, den in 1i64..20, m in 2u64..10, n in 1u64..12) {
        let c = ratio(num, den);
        let lifted = fdtc_lift(&c, m, n).unwrap();
        prop_assert_eq!(&lifted * Rational::from_integer((n as i64).into()), &c * int(m.gcd(&n) as i64));
        prop_assert_eq!(fdtc_lift(&c, m, 1).unwrap(), c);
    }
}
