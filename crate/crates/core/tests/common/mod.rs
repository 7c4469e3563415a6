//! Strategies and property checks shared by the property suites and the
//! acceptance run.

#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use jonesmod::classify::mirror_parameter;
use jonesmod::knot::{bracket_contracted_with_order, bracket_state_sum, jones, mirror, parse_braid, BraidWord, PDCode};
use jonesmod::knotdb::KnotDb;
use jonesmod::laurent::f_poly;
use jonesmod::modp::canonical_residue;
use jonesmod::{classify, eval_special, reference_poly, Family, LaurentPoly, Prime};

/// Cases per property.
pub const CASES: u32 = 1000;

pub fn db() -> &'static KnotDb {
    static DB: OnceLock<KnotDb> = OnceLock::new();
    DB.get_or_init(KnotDb::bundled)
}

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(|p| Prime::new(p).unwrap())
}

pub fn poly_z() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..=6, prop::collection::vec(-20i64..=20, 0..10)).prop_map(|(lo, cs)| LaurentPoly::from_coeffs(lo, cs))
}

pub fn poly_mod(p: Prime) -> impl Strategy<Value = LaurentPoly> {
    poly_z().prop_map(move |g| g.reduce_mod(p).unwrap())
}

/// Parameters whose reference polynomial satisfies the fifth condition.
fn realizable_parameters(family: Family) -> Vec<i64> {
    let powers: Vec<i64> = (0..6).map(|k| 3i64.pow(k)).flat_map(|x| [x, -x]).collect();
    let mut ns: Vec<i64> = powers
        .iter()
        .filter_map(|&s| {
            let num = match family {
                Family::III => s + 1,
                _ => s - 1,
            };
            (num % 2 == 0).then_some(num / 2)
        })
        .collect();
    ns.sort();
    ns.dedup();
    ns
}

/// `reference_poly(F, n) + f·q` with the known `(F, n)`.
pub fn knot_like() -> impl Strategy<Value = (Family, i64, LaurentPoly)> {
    prop::sample::select(Family::ALL.to_vec())
        .prop_flat_map(|fam| (Just(fam), prop::sample::select(realizable_parameters(fam)), poly_z()))
        .prop_map(|(fam, n, q)| {
            let v = &reference_poly(fam, &BigInt::from(n)) + &(&f_poly() * &q);
            (fam, n, v)
        })
}

/// Products of table polynomials and their mirrors.
pub fn table_product() -> impl Strategy<Value = LaurentPoly> {
    let n = db().len();
    prop::collection::vec((0..n, any::<bool>()), 1..4).prop_map(|picks| {
        picks
            .into_iter()
            .map(|(i, m)| {
                let v = db().records()[i].jones_z.clone();
                if m {
                    mirror(&v)
                } else {
                    v
                }
            })
            .product()
    })
}

/// Table diagrams with at most `max` crossings.
pub fn table_diagram(max: usize) -> impl Strategy<Value = PDCode> {
    let pds: Vec<PDCode> = db()
        .records()
        .iter()
        .map(|r| r.pd.clone())
        .filter(|pd| pd.crossing_count() <= max)
        .collect();
    prop::sample::select(pds)
}

/// Braid words on up to four strands whose closure is a knot.
pub fn knot_braid() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..9).prop_filter_map(
        "closure is a link",
        |g| {
            let w = BraidWord::new(g).unwrap();
            (w.closure_components() == 1).then_some(w)
        },
    )
}

pub fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, check).map_err(|e| format!("{name}: {e}"))
}

pub fn ring_axioms_z((a, b, c): (LaurentPoly, LaurentPoly, LaurentPoly)) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&(&a + &b) - &b, a.clone());
    prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
    Ok(())
}

pub fn ring_axioms_mod(p: Prime, (a, b, c): (LaurentPoly, LaurentPoly, LaurentPoly)) -> Result<(), TestCaseError> {
    let one = LaurentPoly::one().reduce_mod(p).unwrap();
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&(&a + &b) - &b, a.clone());
    prop_assert_eq!(&a * &one, a.clone());
    // p·a = 0
    let mut sum = LaurentPoly::zero().reduce_mod(p).unwrap();
    for _ in 0..p.get() {
        sum = &sum + &a;
    }
    prop_assert!(sum.is_zero());
    Ok(())
}

pub fn evaluation_homomorphism((a, b): (LaurentPoly, LaurentPoly)) -> Result<(), TestCaseError> {
    let (va, vb) = (eval_special(&a).unwrap(), eval_special(&b).unwrap());
    let prod = eval_special(&(&a * &b)).unwrap();
    let sum = eval_special(&(&a + &b)).unwrap();
    prop_assert_eq!(&prod.at_one, &(&va.at_one * &vb.at_one));
    prop_assert_eq!(&prod.deriv_at_one, &(&va.deriv_at_one * &vb.at_one + &va.at_one * &vb.deriv_at_one));
    prop_assert_eq!(prod.at_i, va.at_i.clone() * vb.at_i.clone());
    prop_assert_eq!(prod.at_zeta3, va.at_zeta3.clone() * vb.at_zeta3.clone());
    prop_assert_eq!(prod.at_zeta6, va.at_zeta6.clone() * vb.at_zeta6.clone());
    prop_assert_eq!(sum.at_i, va.at_i.clone() + vb.at_i.clone());
    prop_assert_eq!(sum.at_zeta6, va.at_zeta6.clone() + vb.at_zeta6.clone());
    // mirror conjugates
    let m = eval_special(&mirror(&a)).unwrap();
    prop_assert_eq!(m.at_i, va.at_i.conj());
    prop_assert_eq!(m.at_zeta6, va.at_zeta6.conj());
    Ok(())
}

pub fn residue_invariance((g, q, shift): (LaurentPoly, LaurentPoly, i64)) -> Result<(), TestCaseError> {
    let p = g.modulus().unwrap();
    let f = f_poly().reduce_mod(p).unwrap();
    let r = canonical_residue(&g).unwrap();
    prop_assert!(r.is_zero() || r.supported_in(0, 7), "residue {} out of range", r);
    prop_assert_eq!(&canonical_residue(&(&g + &(&f * &q))).unwrap(), &r);
    prop_assert!(g.try_sub(&r).unwrap().divide_by(&f).unwrap().divisible);
    prop_assert_eq!(canonical_residue(&r).unwrap(), r.clone());
    // residues respect products and shifts
    let rq = canonical_residue(&q).unwrap();
    prop_assert_eq!(canonical_residue(&(&g * &q)).unwrap(), canonical_residue(&(&r * &rq)).unwrap());
    if p.get() == 2 {
        prop_assert_eq!(canonical_residue(&g.shift(12 * shift)).unwrap(), r);
    }
    Ok(())
}

pub fn mirror_covariance((family, n, v): (Family, i64, LaurentPoly)) -> Result<(), TestCaseError> {
    let c = classify(&v).map_err(|e| TestCaseError::fail(format!("{v}: {e}")))?;
    prop_assert_eq!(c.family, family);
    prop_assert_eq!(&c.n, &BigInt::from(n));
    let m = classify(&mirror(&v)).map_err(|e| TestCaseError::fail(format!("mirror of {v}: {e}")))?;
    prop_assert_eq!(m.family, family);
    prop_assert_eq!(m.n, mirror_parameter(family, &c.n));
    Ok(())
}

pub fn table_mirror_covariance(v: LaurentPoly) -> Result<(), TestCaseError> {
    let c = classify(&v).map_err(|e| TestCaseError::fail(format!("{v}: {e}")))?;
    let m = classify(&mirror(&v)).map_err(|e| TestCaseError::fail(format!("mirror of {v}: {e}")))?;
    prop_assert_eq!(m.family, c.family);
    prop_assert_eq!(m.n, mirror_parameter(c.family, &c.n));
    prop_assert!(c.realizable_n);
    Ok(())
}

pub fn reduce_naturality((p, a, b): (Prime, LaurentPoly, LaurentPoly)) -> Result<(), TestCaseError> {
    let r = |x: &LaurentPoly| x.reduce_mod(p).unwrap();
    prop_assert_eq!(r(&(&a + &b)), &r(&a) + &r(&b));
    prop_assert_eq!(r(&(&a * &b)), &r(&a) * &r(&b));
    prop_assert_eq!(r(&mirror(&a)), mirror(&r(&a)));
    prop_assert_eq!(r(&(-&a)), -&r(&a));
    prop_assert_eq!(r(&r(&a).lift()), r(&a));
    Ok(())
}

pub fn state_sum_order_independence((pd, seed): (PDCode, Vec<usize>)) -> Result<(), TestCaseError> {
    let n = pd.crossing_count();
    // permutation from the seed by a Fisher–Yates pass
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, seed[i] % (i + 1));
    }
    let naive = bracket_state_sum(&pd);
    prop_assert_eq!(bracket_contracted_with_order(&pd, &order), naive.clone());
    prop_assert_eq!(bracket_state_sum(&pd.permute_crossings(&order)), naive);
    Ok(())
}

pub fn relabel_invariance((pd, seed, rot): (PDCode, Vec<usize>, usize)) -> Result<(), TestCaseError> {
    let m = 2 * pd.crossing_count();
    let mut perm: Vec<u32> = (1..=m as u32).collect();
    for i in (1..m).rev() {
        perm.swap(i, seed[i] % (i + 1));
    }
    let v = jones(&pd).unwrap();
    prop_assert_eq!(jones(&pd.relabel(&perm).unwrap()).unwrap(), v.clone());
    if pd.crossing_count() > 0 {
        prop_assert_eq!(jones(&pd.rotate_crossing(rot % pd.crossing_count())).unwrap(), v);
    }
    Ok(())
}

pub fn braid_r2_stability((w, k): (BraidWord, i32)) -> Result<(), TestCaseError> {
    if w.generators().is_empty() {
        return Ok(());
    }
    let base = jones(&w.to_pd().unwrap()).unwrap();
    let mut g = w.generators().to_vec();
    let k = k.clamp(1, w.strand_count().max(2) as i32 - 1);
    g.extend([k, -k]);
    let longer = BraidWord::new(g).unwrap();
    prop_assert_eq!(jones(&longer.to_pd().unwrap()).unwrap(), base.clone());
    // inserting the pair at the front as well
    let mut front = vec![-k, k];
    front.extend(w.generators());
    let front = parse_braid(&BraidWord::new(front).unwrap().to_string()).unwrap();
    prop_assert_eq!(jones(&front.to_pd().unwrap()).unwrap(), base);
    Ok(())
}

pub type Property = (&'static str, Box<dyn Fn() -> Result<(), String>>);

/// Every named property with its runner, for the acceptance report.
pub fn all_properties() -> Vec<Property> {
    vec![
        (
            "ring axioms over Z",
            Box::new(|| run_property("ring Z", (poly_z(), poly_z(), poly_z()), ring_axioms_z)),
        ),
        (
            "ring axioms over F_p",
            Box::new(|| {
                let s = small_prime().prop_flat_map(|p| (Just(p), (poly_mod(p), poly_mod(p), poly_mod(p))));
                run_property("ring F_p", s, |(p, abc)| ring_axioms_mod(p, abc))
            }),
        ),
        (
            "evaluation homomorphisms",
            Box::new(|| run_property("evaluation", (poly_z(), poly_z()), evaluation_homomorphism)),
        ),
        (
            "residue class invariance",
            Box::new(|| {
                let s = small_prime().prop_flat_map(|p| (poly_mod(p), poly_mod(p), -3i64..=3));
                run_property("residue", s, residue_invariance)
            }),
        ),
        (
            "mirror covariance of classification",
            Box::new(|| run_property("mirror covariance", knot_like(), mirror_covariance)),
        ),
        (
            "mirror covariance on table products",
            Box::new(|| run_property("table mirror covariance", table_product(), table_mirror_covariance)),
        ),
        (
            "reduce_mod_p naturality",
            Box::new(|| run_property("reduce", (small_prime(), poly_z(), poly_z()), reduce_naturality)),
        ),
        (
            "state-sum order independence",
            Box::new(|| {
                let s = (table_diagram(10), prop::collection::vec(any::<usize>(), 24));
                run_property("state sum order", s, state_sum_order_independence)
            }),
        ),
        (
            "jones relabel/rotation invariance",
            Box::new(|| {
                let s = (table_diagram(12), prop::collection::vec(any::<usize>(), 24), any::<usize>());
                run_property("relabel", s, relabel_invariance)
            }),
        ),
        (
            "braid R2 stability",
            Box::new(|| run_property("braid R2", (knot_braid(), 1i32..=3), braid_r2_stability)),
        ),
    ]
}
