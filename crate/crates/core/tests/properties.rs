use hypermaps::engine::{count_poly, max_genus, n_exponent};
use hypermaps::exact::{format_rational, parse_rational, Rational};
use hypermaps::oracle::{brute_count, Permutation};
use num_traits::Signed;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn counts_are_symmetric_and_well_formed(l in 2usize..=5, mut b in prop::collection::vec(1u64..=5, 1..=3)) {
        let r = count_poly(l, &b).unwrap();
        b.reverse();
        prop_assert_eq!(&count_poly(l, &b).unwrap(), &r);
        let d: u64 = b.iter().sum();
        if !d.is_multiple_of(l as u64) {
            prop_assert!(r.is_zero());
        } else {
            let top = n_exponent(l, &b, 0);
            for (e, _) in r.poly_n.terms() {
                prop_assert_eq!((top - e as i64).rem_euclid(2), 0);
            }
            for (&g, v) in &r.by_genus {
                prop_assert!(g <= max_genus(l, &b).unwrap());
                prop_assert!(!v.is_negative());
            }
        }
    }

    #[test]
    fn engine_matches_oracle(l in 2usize..=4, b in prop::collection::vec(1u64..=3, 1..=3)) {
        let r = count_poly(l, &b).unwrap();
        prop_assert_eq!(brute_count(l, &b, 12).unwrap(), r.by_genus);
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
        let x = Rational::new(p.into(), q.into());
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn permutation_group_laws(images in Just((0u8..7).collect::<Vec<u8>>()).prop_shuffle()) {
        let p = Permutation::from_images(images).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(7));
        prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), 7);
    }
}
