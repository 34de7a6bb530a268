//! Randomized invariants across the library.

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use seqforge::arith;
use seqforge::coord;
use seqforge::lex;
use seqforge::queens;
use seqforge::seq::{self, Term};
use seqforge::tag::{self, TagBudget, TagStatus, TagWord};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorizations_multiply_back(n in 2u128..(1u128 << 90)) {
        let n = BigUint::from(n);
        let f = arith::factor(&n).unwrap();
        prop_assert_eq!(f.product(), n);
        for (p, e) in f.factors() {
            prop_assert!(*e >= 1);
            prop_assert!(arith::is_prime(p).is_prime_like());
        }
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn u64_primality_matches_trial_division(n in 0u64..2_000_000) {
        let naive = n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        prop_assert_eq!(arith::is_prime_u64(n), naive);
    }

    #[test]
    fn bfile_round_trip(offset in -5i64..5, values in prop::collection::vec(any::<i64>(), 0..50)) {
        let terms: Vec<Term> = values.iter().enumerate().map(|(i, &v)| Term::new(offset + i as i64, BigInt::from(v))).collect();
        let text = seq::render_bfile(&terms);
        prop_assert_eq!(seq::parse_bfile(text.as_bytes()).unwrap(), terms);
    }

    #[test]
    fn steppers_agree(symbols in prop::collection::vec(0u8..2, 1..64)) {
        let rules = tag::post_rules();
        let w = TagWord::from_symbols(2, &symbols);
        let budget = TagBudget { max_steps: 50_000, max_word_len: 2000 };
        let plain = tag::trajectory(&w, &rules, &budget);
        prop_assert_eq!(tag::accelerated_trajectory(&w, &rules, &budget).unwrap(), plain);
        if plain.status == TagStatus::Dies {
            prop_assert_eq!(plain.cycle_len, 1);
            prop_assert_eq!(plain.words, plain.steps + 1);
        }
    }

    #[test]
    fn cube_free_prefixes_are_cube_free(n in 1usize..400) {
        let r = lex::cubefree_earliest(n, 40).unwrap();
        prop_assert!(lex::is_cubefree(&r.terms));
        prop_assert_eq!(r.certified_len, n);
    }

    #[test]
    fn queens_verdicts_survive_symmetry(n in 3usize..9, k in 0usize..8) {
        let p = queens::jubin_construction(n);
        prop_assert!(queens::verify(&p));
        let t = p.transformed(k);
        prop_assert!(queens::verify(&t));
        prop_assert!(queens::verify(&t.colours_swapped()));
        prop_assert_eq!(t.m(), p.m());
    }

    #[test]
    fn coordination_shells_cover_the_ball(r in 0usize..40) {
        // Shells partition the vertices within distance r.
        let terms = coord::coordination_sequence(&coord::square_grid(), 0, r).unwrap().terms;
        let r = r as u64;
        prop_assert_eq!(terms.iter().sum::<u64>(), 2 * r * r + 2 * r + 1);
    }

    #[test]
    fn lex_prefixes_are_stable(n in 1usize..300, m in 1usize..300) {
        let (short, long) = (n.min(m), n.max(m));
        for f in [lex::ekg, lex::yellowstone, lex::quet, lex::sigrist, lex::bottomley] {
            prop_assert_eq!(&f(long)[..short], &f(short)[..]);
        }
    }
}
