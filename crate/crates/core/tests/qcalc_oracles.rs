use std::collections::HashMap;

use num_rational::BigRational;
use proptest::prelude::*;
use qflag_core::qcalc::{
    big_to_f64, q_integer, q_pochhammer, quantum_dim_product, LaurentPoly, QDomain, RationalFunction,
};
use qflag_core::repdata::{dominant_weights, weight_table};
use qflag_core::rootsys::{RootSystem, Weight};
use qflag_core::Rational;

fn naive_mul(a: &[(i64, i64)], b: &[(i64, i64)]) -> HashMap<i64, i64> {
    let mut out = HashMap::new();
    for &(e, c) in a {
        for &(f, d) in b {
            *out.entry(e + f).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn as_map(p: &LaurentPoly) -> HashMap<i64, i64> {
    p.terms().collect()
}

fn arb_terms() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-12i64..=12, -20i64..=20), 0..8)
}

fn float_q_int(n: i64, q: f64) -> f64 {
    (q.powi(-n as i32) - q.powi(n as i32)) / (q.powi(-1) - q)
}

proptest! {
    #[test]
    fn multiplication_matches_naive_convolution(a in arb_terms(), b in arb_terms()) {
        let pa = LaurentPoly::from_terms(a.clone());
        let pb = LaurentPoly::from_terms(b.clone());
        let na: Vec<_> = pa.terms().collect();
        let nb: Vec<_> = pb.terms().collect();
        prop_assert_eq!(as_map(&(&pa * &pb)), naive_mul(&na, &nb));
        prop_assert_eq!(&pa * &pb, &pb * &pa);
    }

    #[test]
    fn ring_axioms(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        let (a, b, c) = (LaurentPoly::from_terms(a), LaurentPoly::from_terms(b), LaurentPoly::from_terms(c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_round_trips(a in arb_terms(), b in arb_terms()) {
        let pa = LaurentPoly::from_terms(a);
        let pb = LaurentPoly::from_terms(b);
        prop_assume!(!pb.is_zero());
        prop_assert_eq!((&pa * &pb).div_exact(&pb).unwrap(), pa);
    }

    #[test]
    fn exact_and_float_evaluation_agree(a in arb_terms(), num in 1i64..20, extra in 1i64..20) {
        let p = LaurentPoly::from_terms(a.clone());
        let q = Rational::new(num, num + extra);
        let qf = num as f64 / (num + extra) as f64;
        let oracle: f64 = p.terms().map(|(e, c)| c as f64 * qf.powi(e as i32)).sum();
        let exact = big_to_f64(&p.eval_rational(&q, QDomain::Standard).unwrap());
        prop_assert!((exact - oracle).abs() <= 1e-9 * (1.0 + oracle.abs()));
        let fl = p.eval_f64(qf, QDomain::Standard).unwrap();
        prop_assert!((fl - oracle).abs() <= 1e-9 * (1.0 + oracle.abs()));
    }

    #[test]
    fn rational_functions_evaluate_as_quotients(a in arb_terms(), b in arb_terms(), num in 1i64..10) {
        let pa = LaurentPoly::from_terms(a);
        let pb = LaurentPoly::from_terms(b);
        let q = Rational::new(num, 11);
        let da = pa.eval_rational(&q, QDomain::Standard).unwrap();
        let db = pb.eval_rational(&q, QDomain::Standard).unwrap();
        prop_assume!(db != BigRational::from_integer(0.into()));
        let f = RationalFunction::new(pa, pb).unwrap();
        prop_assert_eq!(f.eval_rational(&q, QDomain::Standard).unwrap(), da / db);
    }
}

#[test]
fn q_integers_and_pochhammer_against_floats() {
    for q in [0.3, 0.5, 0.9] {
        for n in -6..=6 {
            let v = q_integer(n).eval_f64(q, QDomain::Standard).unwrap();
            assert!((v - float_q_int(n, q)).abs() < 1e-9, "[{n}] at {q}");
        }
        for (a, t, m) in [(2, 2, 1), (2, 2, 3), (1, 3, 4), (-2, 1, 5)] {
            let oracle: f64 = (0..m).map(|j| 1.0 - q.powi(a + j * t as i32)).product();
            let v = q_pochhammer(a as i64, t, m as u32).eval_f64(q, QDomain::Standard).unwrap();
            assert!((v - oracle).abs() < 1e-9, "({a};{t})_{m} at {q}");
        }
    }
}

/// Weyl dimension formula evaluated in floats at a few real q.
#[test]
fn quantum_dimensions_against_float_products() {
    for label in ["A2", "A3", "B2", "B3", "C3", "G2"] {
        let rs = RootSystem::from_label(label).unwrap();
        let rho = rs.weyl_vector();
        let top = Weight::new(vec![if rs.rank() > 2 { 1 } else { 2 }; rs.rank()]);
        for lambda in dominant_weights(&rs, &top).unwrap() {
            let qd = quantum_dim_product(&rs, &lambda).unwrap();
            let lr = &lambda + &rho;
            for q in [0.4, 0.8] {
                let oracle: f64 = rs
                    .positive_roots()
                    .iter()
                    .map(|a| float_q_int(rs.root_pairing(&lr, a), q) / float_q_int(rs.root_pairing(&rho, a), q))
                    .product();
                let v = qd.eval_f64(q, QDomain::Standard).unwrap();
                assert!((v - oracle).abs() <= 1e-8 * oracle, "{label} {lambda} at {q}");
            }
            assert!(qd.is_palindromic());
            assert_eq!(qd.eval_at_one() as u64, weight_table(&rs, &lambda).unwrap().dimension());
        }
    }
}
