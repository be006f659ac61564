mod common;

use braidcert::threebraid::{normal_form, nt_type, sl2_image, NtType, ThreeBraidNormalForm};
use common::{arb_word, scramble};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_a_conjugacy_invariant(u in arb_word(3, 30), x in arb_word(3, 12), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let conj = scramble(&mut rng, &u.conjugate_by(&x).unwrap(), 6);
        prop_assert_eq!(normal_form(&conj).unwrap(), normal_form(&u).unwrap());
    }

    #[test]
    fn representative_is_conjugate_and_canonical(u in arb_word(3, 30)) {
        let nf = normal_form(&u).unwrap();
        let rep = nf.representative();
        prop_assert_eq!(normal_form(&rep).unwrap(), nf.clone());
        prop_assert_eq!(rep.exponent_sum(), u.exponent_sum());
        if let ThreeBraidNormalForm::PseudoAnosov { a, .. } = &nf {
            prop_assert!(a.iter().any(|&x| x > 0));
        }
    }

    /// `|tr| > 2` hyperbolic, `= 2` parabolic or central, `< 2` elliptic.
    #[test]
    fn trace_agrees_with_the_classification(u in arb_word(3, 30)) {
        let nf = normal_form(&u).unwrap();
        let m = sl2_image(&u).unwrap();
        prop_assert_eq!(m.det(), BigInt::from(1));
        let t = m.trace().abs();
        let expected = match t.cmp(&BigInt::from(2)) {
            std::cmp::Ordering::Greater => NtType::PseudoAnosov,
            std::cmp::Ordering::Equal => NtType::Reducible,
            std::cmp::Ordering::Less => NtType::Periodic,
        };
        prop_assert_eq!(nt_type(&nf), expected, "{} has trace {}", nf, m.trace());
    }

    #[test]
    fn inverse_negates_the_twist(u in arb_word(3, 30)) {
        let nf = normal_form(&u).unwrap();
        let inv = normal_form(&u.inverse()).unwrap();
        prop_assert_eq!(nt_type(&nf), nt_type(&inv));
        if let (ThreeBraidNormalForm::PseudoAnosov { d, .. }, ThreeBraidNormalForm::PseudoAnosov { d: e, .. }) = (&nf, &inv) {
            prop_assert_eq!(*d, -*e);
        }
    }
}
