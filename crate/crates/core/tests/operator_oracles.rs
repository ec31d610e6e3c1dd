use std::collections::BTreeMap;

use qflag_core::haar::{haar_diag_mass, haar_p0, su2_haar_eval, HaarDatum};
use qflag_core::qcalc::QDomain;
use qflag_core::rootsys::{RootSystem, Weight};
use qflag_core::soibelman::{diagonal_model, power_norm_gap, projection_gap, spectrum, su2_generators, DiagonalModel};

fn tuples(factors: usize, trunc: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..factors {
        out = out.into_iter().flat_map(|t: Vec<usize>| (0..trunc).map(move |k| [t.as_slice(), &[k]].concat())).collect();
    }
    out
}

/// Eigenvalue exponents of every basis tuple, counted one by one.
fn brute_levels(model: &DiagonalModel) -> BTreeMap<u64, u64> {
    let c = model.exponents();
    let mut out = BTreeMap::new();
    for t in tuples(c.len(), model.trunc()) {
        let s: u64 = t.iter().zip(&c).map(|(&k, &c)| k as u64 * c).sum();
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

fn models() -> Vec<DiagonalModel> {
    let cases: &[(&str, &[i64])] =
        &[("A1", &[1]), ("A1", &[3]), ("A2", &[1, 1]), ("A2", &[2, 1]), ("B2", &[1, 1]), ("B2", &[1, 2]), ("G2", &[1, 1])];
    cases
        .iter()
        .map(|&(label, l)| {
            let rs = RootSystem::from_label(label).unwrap();
            let trunc = if label == "G2" { 4 } else { 7 };
            diagonal_model(&rs, &Weight::new(l.to_vec()), rs.longest_element(), 0.5, trunc).unwrap()
        })
        .collect()
}

#[test]
fn spectra_match_tuple_enumeration() {
    for model in models() {
        let brute = brute_levels(&model);
        let cutoff = 0.5f64.powi(12);
        let lines = spectrum(&model, cutoff).unwrap();
        let expected: Vec<(u64, u64)> = brute.iter().filter(|(&s, _)| s <= 12).map(|(&s, &m)| (s, m)).collect();
        let got: Vec<(u64, u64)> = lines.iter().map(|l| (l.power, l.multiplicity)).collect();
        assert_eq!(got, expected, "{:?}", model.exponents());
        assert_eq!(brute.get(&0), Some(&1));
        assert_eq!(model.unit_eigenspace(), vec![vec![0; model.factors()]]);
    }
}

#[test]
fn norm_gaps_match_tuple_enumeration() {
    for model in models() {
        let brute = brute_levels(&model);
        let q = model.q();
        for m in 1..=4u32 {
            for n in m..=6u32 {
                let oracle = brute
                    .keys()
                    .map(|&s| (q.powi((m as u64 * s) as i32) - q.powi((n as u64 * s) as i32)).abs())
                    .fold(0.0, f64::max);
                let gap = power_norm_gap(&model, m, n).unwrap();
                assert!((gap - oracle).abs() < 1e-14, "{:?} m={m} n={n}", model.exponents());
                assert!(gap <= q.powi(m as i32) + 1e-15);
            }
            let first = *brute.keys().nth(1).unwrap();
            assert!((projection_gap(&model, m).unwrap() - q.powi((m as u64 * first) as i32)).abs() < 1e-15);
        }
    }
}

#[test]
fn diagonal_mass_decreases_in_every_coordinate() {
    for label in ["A1", "A2", "B2", "G2"] {
        let rs = RootSystem::from_label(label).unwrap();
        let k = rs.positive_roots().len();
        for m in tuples(k, 3) {
            let m: Vec<u64> = m.into_iter().map(|x| x as u64).collect();
            let here = haar_diag_mass(&rs, &m).unwrap().eval_f64(0.6, QDomain::Standard).unwrap();
            assert!(here > 0.0);
            for l in 0..k {
                let mut up = m.clone();
                up[l] += 1;
                let next = haar_diag_mass(&rs, &up).unwrap().eval_f64(0.6, QDomain::Standard).unwrap();
                assert!(next < here, "{label} {m:?} -> {up:?}");
            }
        }
    }
}

#[test]
fn haar_atom_total_mass_by_brute_summation() {
    let q = 0.7;
    for label in ["A1", "A2"] {
        let rs = RootSystem::from_label(label).unwrap();
        let datum = HaarDatum::new(&rs);
        let p0 = haar_p0(&rs).eval_f64(q, QDomain::Standard).unwrap();
        let total: f64 = tuples(datum.density_exponents().len(), 60)
            .iter()
            .map(|m| {
                let s: u64 = m.iter().zip(datum.density_exponents()).map(|(&k, &e)| k as u64 * e).sum();
                p0 * q.powi(s as i32)
            })
            .sum();
        assert!((total - 1.0).abs() < 1e-6, "{label}: {total}");
    }
}

#[test]
fn su2_generators_satisfy_defining_relations() {
    let q = 0.6;
    let n = 16;
    let g = su2_generators(q, n).unwrap();
    let xx = g.x.compose(&g.x.adjoint());
    let xsx = g.x.adjoint().compose(&g.x);
    for k in 0..n - 1 {
        assert!((xx.get(k, k) - (1.0 - q.powi(2 * k as i32))).abs() < 1e-12);
        assert!((xsx.get(k, k) - (1.0 - q.powi(2 * k as i32 + 2))).abs() < 1e-12);
    }
    let uu = g.u.compose(&g.u.adjoint());
    let a = xx.sub(&uu.scaled(-1.0));
    let b = xsx.sub(&g.u.adjoint().compose(&g.u).scaled(-q * q));
    for k in 0..n - 1 {
        assert!((a.get(k, k) - 1.0).abs() < 1e-12);
        assert!((b.get(k, k) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn su2_haar_closed_forms() {
    for q in [0.25, 0.5, 0.75] {
        let h = |w: &str| su2_haar_eval(w, q, 64).unwrap().value;
        let q2 = q * q;
        assert!((h("x x*") - q2 / (1.0 + q2)).abs() < 1e-12);
        assert!((h("x* x") - 1.0 / (1.0 + q2)).abs() < 1e-12);
        assert!((h("u u*") - 1.0 / (1.0 + q2)).abs() < 1e-12);
        assert_eq!(h("x"), 0.0);
        assert_eq!(h("x u"), 0.0);
        assert!((h("") - 1.0).abs() < 1e-15);
        // density q^{2k} against (u u*)^2 = q^{4k}
        assert!((h("u u* u u*") - (1.0 - q2) / (1.0 - q2 * q2 * q2)).abs() < 1e-12);
    }
}
