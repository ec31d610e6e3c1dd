//! Invariant suite behind `qflag selftest`.

use qflag_core::classify::{classify_action, ActionSpec, Block, Verdict};
use qflag_core::haar::{haar_a_lambda_sq, haar_p0, su2_orthogonality_suite, HaarDatum};
use qflag_core::qcalc::{q_pochhammer, quantum_dim_product, quantum_dim_weight_sum, LaurentPoly};
use qflag_core::repdata::{classical_dim, dominant_weights, qdim_via_character, weight_table};
use qflag_core::rootsys::{RootSystem, Weight};
use qflag_core::soibelman::{commutation_check, diagonal_model, power_norm_gap};
use qflag_core::Rational;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut s: String = self
            .checks
            .iter()
            .map(|c| format!("{:<width$}  {}  {}\n", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail))
            .collect();
        s.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        s
    }
}

type Outcome = Result<String, String>;
type Step = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const TYPES: [&str; 5] = ["A1", "A2", "A3", "B2", "G2"];

fn sweep(label: &str) -> Result<(RootSystem, Vec<Weight>), String> {
    let rs = RootSystem::from_label(label).map_err(|e| e.to_string())?;
    let top = Weight::new(vec![if rs.rank() > 2 { 1 } else { 2 }; rs.rank()]);
    let ws = dominant_weights(&rs, &top).map_err(|e| e.to_string())?;
    Ok((rs, ws))
}

fn quantum_dimensions() -> Outcome {
    let mut n = 0;
    for label in TYPES {
        let (rs, ws) = sweep(label)?;
        for l in ws {
            let t = weight_table(&rs, &l).map_err(|e| e.to_string())?;
            let a = quantum_dim_product(&rs, &l).map_err(|e| e.to_string())?;
            let b = quantum_dim_weight_sum(&rs, &l, &t).map_err(|e| e.to_string())?;
            let c = qdim_via_character(&rs, &l).map_err(|e| e.to_string())?;
            ensure(a == b && b == c, || format!("{label} {l}: formulas disagree"))?;
            ensure(a.is_palindromic(), || format!("{label} {l}: not palindromic"))?;
            let d = classical_dim(&rs, &l).map_err(|e| e.to_string())?;
            ensure(a.eval_at_one() == d as i64, || format!("{label} {l}: q=1 value {} vs {d}", a.eval_at_one()))?;
            n += 1;
        }
    }
    Ok(format!("{n} weights"))
}

fn haar_atom() -> Outcome {
    for n in 2..=4u32 {
        let rs = RootSystem::from_label(&format!("A{}", n - 1)).map_err(|e| e.to_string())?;
        let expected: LaurentPoly = (1..n).map(|k| q_pochhammer(2, 2, k)).product();
        ensure(haar_p0(&rs) == expected, || format!("A{}", n - 1))?;
    }
    Ok("A1..A3".into())
}

fn haar_cross_identity() -> Outcome {
    let mut n = 0;
    for label in TYPES {
        let (rs, ws) = sweep(label)?;
        for l in ws {
            let c = haar_a_lambda_sq(&rs, &l).map_err(|e| e.to_string())?;
            ensure(c.equal, || format!("{label} {l}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} weights"))
}

fn normalization() -> Outcome {
    for label in ["A1", "A2", "B2"] {
        let rs = RootSystem::from_label(label).map_err(|e| e.to_string())?;
        let total = HaarDatum::new(&rs).truncated_total(&Rational::new(1, 2), 32).map_err(|e| e.to_string())?;
        let gap = 1.0 - qflag_core::qcalc::big_to_f64(&total);
        let k = rs.positive_roots().len() as f64;
        ensure(gap.abs() <= k * 0.5f64.powi(64), || format!("{label}: 1 - total = {gap:e}"))?;
    }
    Ok("q = 1/2, N = 32".into())
}

fn soibelman_bounds() -> Outcome {
    let q = 0.5;
    for label in ["A1", "A2", "B2"] {
        let rs = RootSystem::from_label(label).map_err(|e| e.to_string())?;
        let l = Weight::new(vec![1; rs.rank()]);
        let model = diagonal_model(&rs, &l, rs.longest_element(), q, 8).map_err(|e| e.to_string())?;
        for m in 1..=8 {
            for n in m..=8 {
                let g = power_norm_gap(&model, m, n).map_err(|e| e.to_string())?;
                ensure(g <= q.powi(m as i32), || format!("{label} m={m} n={n}: {g}"))?;
            }
        }
        ensure(model.unit_eigenspace().len() == 1, || format!("{label}: eigenvalue 1 not simple"))?;
    }
    Ok("1 <= m <= n <= 8".into())
}

fn orthogonality() -> Outcome {
    let r = su2_orthogonality_suite(0.5, 64).map_err(|e| e.to_string())?;
    ensure(r.max_deviation < 1e-10, || format!("max deviation {:e}", r.max_deviation))?;
    Ok(format!("max deviation {:e}", r.max_deviation))
}

fn commutation() -> Outcome {
    let r = commutation_check(0.5, 32).map_err(|e| e.to_string())?;
    ensure(r.max_violation < 1e-12, || format!("max violation {:e}", r.max_violation))?;
    Ok(format!("max violation {:e}", r.max_violation))
}

fn classifier() -> Outcome {
    let r = |a, b| Rational::new(a, b);
    let block = |s, b, e| Block::new(s, b, e).map_err(|e| e.to_string());
    let spec = ActionSpec::new(r(1, 2), vec![block(r(0, 1), r(1, 1), r(1, 1))?, block(r(1, 2), r(1, 1), r(1, 1))?])
        .map_err(|e| e.to_string())?;
    ensure(classify_action(&spec).verdict == Verdict::TypeII1PowersFlow, || "spin 0 + 1/2".into())?;
    let spec = ActionSpec::new(
        r(1, 3),
        vec![block(r(0, 1), r(1, 1), r(1, 1))?, block(r(0, 1), r(1, 4), r(1, 1))?, block(r(1, 2), r(1, 4), r(1, 2))?],
    )
    .map_err(|e| e.to_string())?;
    ensure(matches!(classify_action(&spec).verdict, Verdict::TypeIIILambda { .. }), || "lambda = 1/4".into())?;
    Ok("examples".into())
}

fn root_systems() -> Outcome {
    let labels = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];
    for label in labels {
        let rs = RootSystem::from_label(label).map_err(|e| e.to_string())?;
        ensure(rs.positive_roots().len() == rs.longest_element().len(), || label.to_string())?;
        ensure(rs.is_reduced(rs.longest_element()).map_err(|e| e.to_string())?, || label.to_string())?;
    }
    Ok(format!("{} types", labels.len()))
}

pub fn run_suite() -> SelftestReport {
    let suite: [(&'static str, Step); 9] = [
        ("quantum-dimensions", quantum_dimensions),
        ("haar-atom", haar_atom),
        ("haar-cross-identity", haar_cross_identity),
        ("normalization", normalization),
        ("soibelman-bounds", soibelman_bounds),
        ("su2-orthogonality", orthogonality),
        ("commutation", commutation),
        ("classifier", classifier),
        ("root-systems", root_systems),
    ];
    let checks: Vec<Check> = std::thread::scope(|s| {
        let handles: Vec<_> = suite.iter().map(|&(name, f)| (name, s.spawn(f))).collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let r = h.join().unwrap_or_else(|_| Err("panicked".into()));
                match r {
                    Ok(detail) => Check { name, passed: true, detail },
                    Err(detail) => Check { name, passed: false, detail },
                }
            })
            .collect()
    });
    let passed = checks.iter().filter(|c| c.passed).count();
    SelftestReport { passed, failed: checks.len() - passed, checks }
}
