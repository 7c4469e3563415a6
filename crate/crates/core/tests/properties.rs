mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms_over_z(abc in (poly_z(), poly_z(), poly_z())) {
        ring_axioms_z(abc)?;
    }

    #[test]
    fn ring_axioms_over_fp((p, abc) in small_prime().prop_flat_map(|p| (Just(p), (poly_mod(p), poly_mod(p), poly_mod(p))))) {
        ring_axioms_mod(p, abc)?;
    }

    #[test]
    fn evaluation_is_a_homomorphism(ab in (poly_z(), poly_z())) {
        evaluation_homomorphism(ab)?;
    }

    #[test]
    fn residue_is_a_class_invariant(x in small_prime().prop_flat_map(|p| (poly_mod(p), poly_mod(p), -3i64..=3))) {
        residue_invariance(x)?;
    }

    #[test]
    fn classification_mirror_covariance(x in knot_like()) {
        mirror_covariance(x)?;
    }

    #[test]
    fn table_products_mirror_covariance(v in table_product()) {
        table_mirror_covariance(v)?;
    }

    #[test]
    fn reduction_is_natural(x in (small_prime(), poly_z(), poly_z())) {
        reduce_naturality(x)?;
    }

    #[test]
    fn bracket_independent_of_order(x in (table_diagram(10), prop::collection::vec(any::<usize>(), 24))) {
        state_sum_order_independence(x)?;
    }

    #[test]
    fn jones_invariant_under_relabeling(x in (table_diagram(12), prop::collection::vec(any::<usize>(), 24), any::<usize>())) {
        relabel_invariance(x)?;
    }

    #[test]
    fn braid_r2_moves_preserve_jones(x in (knot_braid(), 1i32..=3)) {
        braid_r2_stability(x)?;
    }
}

mod extra {
    use super::common::*;
    use jonesmod::classify::check_conditions;
    use jonesmod::laurent::{f_poly, EisensteinInt};
    use jonesmod::modp::{canonical_residue, enumerate_admissible, reference_set};
    use jonesmod::{classify, reference_poly, Family, LaurentPoly, Prime};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn monic_divisor() -> impl Strategy<Value = LaurentPoly> {
        (prop::collection::vec(-9i64..=9, 0..6), prop::sample::select(vec![1i64, -1]))
            .prop_map(|(mut cs, lead)| {
                // nonzero constant term and unit leading coefficient
                cs.insert(0, 1);
                cs.push(lead);
                LaurentPoly::from_coeffs(0, cs)
            })
    }

    proptest! {
        #![proptest_config(config())]

        #[test]
        fn division_is_sound(g in poly_z(), d in monic_divisor()) {
            let div = g.divide_by(&d).unwrap();
            prop_assert_eq!(&(&d * &div.quotient) + &div.remainder, g);
            prop_assert_eq!(div.divisible, div.remainder.is_zero());
            if !div.remainder.is_zero() {
                prop_assert!(div.remainder.span().unwrap() < d.span().unwrap());
            }
        }

        #[test]
        fn eisenstein_norm_is_multiplicative(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = EisensteinInt::new(a, b);
            let y = EisensteinInt::new(c, d);
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            prop_assert!(x.norm() >= BigInt::from(0));
            prop_assert_eq!(x.norm() == BigInt::from(0), x.is_zero());
            prop_assert_eq!(x.clone() * x.conj(), EisensteinInt::new(x.norm(), 0));
        }

        #[test]
        fn references_satisfy_first_three_conditions(fam in prop::sample::select(Family::ALL.to_vec()), n in -1000i64..1000) {
            let r = check_conditions(&reference_poly(fam, &BigInt::from(n))).unwrap();
            prop_assert!(r.c1 && r.c2 && r.c3 && r.c4);
            let base = reference_poly(fam, &BigInt::from(n));
            prop_assert!(base.is_zero() || base.supported_in(0, 7));
        }

        #[test]
        fn classification_is_unique((fam, n, v) in knot_like()) {
            let c = classify(&v).unwrap();
            prop_assert_eq!((c.family, c.n.clone()), (fam, BigInt::from(n)));
            // no other family admits a divisible difference for its solved n
            for other in Family::ALL {
                if other == fam {
                    continue;
                }
                for m in -40i64..=40 {
                    let d = (&v - &reference_poly(other, &BigInt::from(m))).divide_by(&f_poly()).unwrap();
                    prop_assert!(!d.divisible, "{} also fits ({}, {})", v, other, m);
                }
            }
        }

        #[test]
        fn family_one_is_multiplicative(n1 in prop::sample::select(vec![0i64, 1, -1, -2, 4, -5, 13, -14]),
                                        n2 in prop::sample::select(vec![0i64, 1, -1, -2, 4, -5]),
                                        q1 in poly_z(), q2 in poly_z()) {
            let v1 = &reference_poly(Family::I, &BigInt::from(n1)) + &(&f_poly() * &q1);
            let v2 = &reference_poly(Family::I, &BigInt::from(n2)) + &(&f_poly() * &q2);
            let c = classify(&(&v1 * &v2)).unwrap();
            prop_assert_eq!(c.family, Family::I);
            prop_assert_eq!(&c.n * 2 + 1, BigInt::from((1 + 2 * n1) * (1 + 2 * n2)));
        }

        #[test]
        fn conditions_closed_under_products(a in table_product(), b in table_product()) {
            let (ra, rb) = (check_conditions(&a).unwrap(), check_conditions(&b).unwrap());
            let r = check_conditions(&(&a * &b)).unwrap();
            prop_assert!(r.all_pass());
            prop_assert_eq!(r.m.unwrap(), ra.m.unwrap() + rb.m.unwrap());
            prop_assert_eq!(r.arf_sign.unwrap(), ra.arf_sign.unwrap() * rb.arf_sign.unwrap());
        }

        #[test]
        fn reduction_matches_reference_entries(fam in prop::sample::select(Family::ALL.to_vec()), n in -500i64..500, p in small_prime()) {
            let refs = reference_set(p);
            let k = n.rem_euclid(p.get() as i64) as u64;
            let entry = refs.entries.iter().find(|e| e.family == fam && e.n == k).unwrap();
            prop_assert_eq!(&reference_poly(fam, &BigInt::from(n)).reduce_mod(p).unwrap(), &entry.poly);
        }

        #[test]
        fn twelve_p_shift_fixes_residues(g in prop::sample::select(vec![2u64, 3, 5]).prop_flat_map(|p| poly_mod(Prime::new(p).unwrap()))) {
            let p = g.modulus().unwrap().get();
            let e = if p == 2 { 12 } else { 12 * p as i64 };
            let r = canonical_residue(&g).unwrap();
            prop_assert_eq!(canonical_residue(&g.shift(e)).unwrap(), r.clone());
            let mut x = g.clone();
            for _ in 0..e {
                x = canonical_residue(&x.shift(1)).unwrap();
            }
            prop_assert_eq!(x, r);
        }
    }

    proptest! {
        #![proptest_config(proptest::test_runner::Config { cases: 64, ..config() })]

        #[test]
        fn window_size_formula(p in prop::sample::select(vec![2u64, 3, 5]), a in -20i64..20, extra in 0i64..3) {
            let p = Prime::new(p).unwrap();
            let w = enumerate_admissible(p, a, a + 7 + extra).unwrap();
            let expected = BigInt::from(reference_set(p).distinct_count) * BigInt::from(p.get()).pow(extra as u32);
            prop_assert_eq!(BigInt::from(w.count.clone()), expected);
            if let Some(ms) = w.members() {
                prop_assert_eq!(ms.len() as u64, u64::try_from(&w.count).unwrap());
                for m in ms {
                    prop_assert!(m.supported_in(a, a + 7 + extra));
                }
            }
        }

        #[test]
        fn twelve_p_shift_maps_windows(p in prop::sample::select(vec![2u64, 3]), a in -10i64..10) {
            let prime = Prime::new(p).unwrap();
            let e = if p == 2 { 12 } else { 12 * p as i64 };
            let base = enumerate_admissible(prime, a, a + 8).unwrap();
            let moved = enumerate_admissible(prime, a + e, a + 8 + e).unwrap();
            let shifted: Vec<LaurentPoly> = base.members().unwrap().iter().map(|m| m.shift(e)).collect();
            let mut want = moved.members().unwrap().to_vec();
            let mut got = shifted;
            want.sort();
            got.sort();
            prop_assert_eq!(got, want);
        }
    }
}
