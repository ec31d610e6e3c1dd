use std::path::PathBuf;
use std::process::Command;

use num_rational::BigRational;
use qflag::formats::{
    weight_table_entries, ActionSpecJson, ClassificationJson, CrossCheckJson, DiagonalModelJson, ExactJson,
    LaurentJson, OrthogonalityJson, RootSystemJson, SpectrumJson, ValueJson, WeightTableJson,
};
use qflag_core::classify::{classify_action, Verdict};
use qflag_core::haar::{haar_a_lambda_sq, haar_p0, su2_haar_eval, su2_orthogonality_suite};
use qflag_core::qcalc::{quantum_dim_product, QDomain};
use qflag_core::repdata::weight_table;
use qflag_core::rootsys::{RootSystem, Weight};
use qflag_core::soibelman::{diagonal_model, spectrum};
use qflag_core::Rational;
use serde::de::DeserializeOwned;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qflag").chain(args.iter().copied());
    let code = qflag::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok<T: DeserializeOwned>(args: &[&str]) -> T {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}: {out}"))
}

fn example(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name).display().to_string()
}

#[test]
fn qdim_of_the_fundamental_su2_module() {
    let (code, out, _) = run(&["qdim", "--type", "A", "--rank", "1", "--lambda", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({"terms": [[-1, 1], [1, 1]]}));
}

#[test]
fn qdim_methods_round_trip() {
    let rs = RootSystem::from_label("B2").unwrap();
    let l = Weight::new(vec![1, 2]);
    let expected = quantum_dim_product(&rs, &l).unwrap();
    for method in ["product", "weight-sum", "character"] {
        let j: LaurentJson = ok(&["qdim", "--type", "B", "--rank", "2", "--lambda", "1,2", "--method", method]);
        assert_eq!(qflag_core::qcalc::LaurentPoly::from(&j), expected, "{method}");
    }
}

#[test]
fn haar_p0_exact_evaluation() {
    let j: ValueJson = ok(&["haar-p0", "--type", "A", "--rank", "2", "--q", "1/2", "--eval"]);
    let v = j.value_exact.unwrap().to_value().unwrap();
    assert_eq!(v, BigRational::new(135.into(), 256.into()));
    let rs = RootSystem::from_label("A2").unwrap();
    assert_eq!(v, haar_p0(&rs).eval_rational(&Rational::new(1, 2), QDomain::Standard).unwrap());

    let j: ValueJson = ok(&["haar-p0", "--type", "A", "--rank", "2", "--q", "0.5", "--float", "--eval"]);
    assert_eq!(j.value_float, Some(135.0 / 256.0));
    let j: LaurentJson = ok(&["haar-p0", "--type", "A", "--rank", "1"]);
    assert_eq!(j.terms, vec![(0, 1), (2, -1)]);
}

#[test]
fn haar_diag_matches_shifted_atom() {
    let j: LaurentJson = ok(&["haar-diag", "--type", "A", "--rank", "1", "--m", "2"]);
    let rs = RootSystem::from_label("A1").unwrap();
    assert_eq!(qflag_core::qcalc::LaurentPoly::from(&j), haar_p0(&rs).shift(4));
}

#[test]
fn rootsys_and_weights_round_trip() {
    let j: RootSystemJson = ok(&["rootsys", "--type", "G", "--rank", "2"]);
    let rs = RootSystem::from_label("G2").unwrap();
    assert_eq!(j, RootSystemJson::from(&rs));
    assert_eq!(j.positive_roots.len(), 6);

    let j: WeightTableJson = ok(&["weights", "--type", "A", "--rank", "2", "--lambda", "1,1"]);
    let table = weight_table(&RootSystem::from_label("A2").unwrap(), &Weight::new(vec![1, 1])).unwrap();
    assert_eq!(&weight_table_entries(&j).unwrap(), table.entries());
    assert_eq!(j["0,0"], 2);
}

#[test]
fn fmatrix_trace_is_qdim() {
    let j: qflag::formats::FMatrixJson = ok(&["fmatrix", "--type", "A", "--rank", "2", "--lambda", "2,0"]);
    let p: LaurentJson = ok(&["qdim", "--type", "A", "--rank", "2", "--lambda", "2,0"]);
    let trace: Vec<(i64, i64)> = j.exponents.iter().map(|&(e, m)| (e, m as i64)).collect();
    assert_eq!(trace, p.terms);
    assert_eq!(j.diagonal.len(), 6);
}

#[test]
fn cross_check_round_trip() {
    let j: CrossCheckJson = ok(&["haar-alambda", "--type", "B", "--rank", "2", "--lambda", "0,1"]);
    let rs = RootSystem::from_label("B2").unwrap();
    let c = haar_a_lambda_sq(&rs, &Weight::new(vec![0, 1])).unwrap();
    assert!(j.equal);
    assert_eq!(j.via_product.to_value().unwrap(), c.via_product);
    assert_eq!(j.via_orthogonality.to_value().unwrap(), c.via_orthogonality);
}

#[test]
fn float_outputs_are_bit_identical() {
    let j: ValueJson = ok(&["su2-haar", "--word", "x x*", "--q", "1/2", "--trunc", "64"]);
    let h = su2_haar_eval("x x*", 0.5, 64).unwrap();
    assert_eq!(j.value_float.unwrap().to_bits(), h.value.to_bits());
    assert_eq!(j.tail_bound.unwrap().to_bits(), h.tail_bound.to_bits());

    let j: OrthogonalityJson = ok(&["su2-ortho", "--q", "1/3", "--trunc", "64"]);
    let r = su2_orthogonality_suite(1.0 / 3.0, 64).unwrap();
    assert_eq!(j, OrthogonalityJson::from(&r));
    assert!(j.max_deviation < 1e-10);
}

#[test]
fn spectrum_round_trip() {
    let j: SpectrumJson =
        ok(&["soibelman-spectrum", "--type", "A", "--rank", "2", "--lambda", "1,1", "--q", "1/2", "--trunc", "10"]);
    let rs = RootSystem::from_label("A2").unwrap();
    let m = diagonal_model(&rs, &Weight::new(vec![1, 1]), rs.longest_element(), 0.5, 10).unwrap();
    assert_eq!(j.model, DiagonalModelJson::from(&m));
    let lines = spectrum(&m, 0.5f64.powi(12)).unwrap();
    assert_eq!(j.lines, lines.iter().map(Into::into).collect::<Vec<_>>());
    let rebuilt = j.model.to_value().unwrap();
    assert_eq!(rebuilt.exponents(), m.exponents());

    let g: qflag::formats::GapJson = ok(&[
        "soibelman-gap", "--type", "A", "--rank", "2", "--lambda", "1,1", "--word", "1,2,1", "--q", "1/2", "--m", "2", "--n", "5",
    ]);
    assert!(g.gap <= g.bound);
}

#[test]
fn classify_examples() {
    let j: ClassificationJson = ok(&["classify", "--spec", &example("spin0half.json")]);
    assert_eq!(j.verdict, "TypeII1_PowersFlow");
    let spec: ActionSpecJson =
        serde_json::from_str(&std::fs::read_to_string(example("spin0half.json")).unwrap()).unwrap();
    assert_eq!(j.to_value().unwrap(), classify_action(&spec.to_value().unwrap()));

    for (file, module) in [("powers_q.json", "q"), ("powers_sqrt_lambda_q.json", "sqrt_lambda_q")] {
        let j: ClassificationJson = ok(&["classify", "--spec", &example(file)]);
        assert_eq!(j.verdict, "TypeIIIlambda");
        assert_eq!(j.module.as_deref(), Some(module));
        assert!(matches!(j.to_value().unwrap().verdict, Verdict::TypeIIILambda { .. }));
    }
    let j: ClassificationJson = ok(&["classify", "--spec", &example("dense.json")]);
    assert_eq!(j.verdict, "TypeIII1_Unique");
}

#[test]
fn exact_json_rejects_zero_denominator() {
    let e = ExactJson { num: "1".into(), den: "0".into() };
    assert!(e.to_value().is_err());
}

#[test]
fn error_codes() {
    // domain errors
    assert_eq!(run(&["qdim", "--type", "A", "--rank", "2", "--lambda", "1,-1"]).0, 1);
    assert_eq!(run(&["haar-p0", "--type", "A", "--rank", "1", "--q", "2", "--eval"]).0, 1);
    assert_eq!(run(&["rootsys", "--type", "G", "--rank", "3"]).0, 1);
    assert_eq!(run(&["soibelman-gap", "--type", "A", "--rank", "1", "--lambda", "0", "--q", "1/2", "--m", "1", "--n", "2"]).0, 1);
    // usage errors name the flag
    let (code, _, err) = run(&["qdim", "--type", "A", "--rank", "2", "--lambda", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--lambda"), "{err}");
    let (code, _, err) = run(&["haar-p0", "--type", "A", "--rank", "1", "--q", "0.5", "--eval"]);
    assert_eq!(code, 2);
    assert!(err.contains("--q"), "{err}");
    assert_eq!(run(&["haar-p0", "--type", "A", "--rank", "1", "--eval"]).0, 2);
    assert_eq!(run(&["rootsys", "--type", "Q", "--rank", "1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["classify", "--spec", "/nonexistent.json"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn table_format() {
    let (code, out, _) = run(&["qdim", "--type", "A", "--rank", "1", "--lambda", "1", "--format", "table"]);
    assert_eq!(code, 0);
    assert_eq!(out, "terms[0]  [-1,1]\nterms[1]  [1,1]\n");
}

#[test]
fn binary_exit_codes_and_truncation_override() {
    let bin = env!("CARGO_BIN_EXE_qflag");
    let out = Command::new(bin).args(["selftest"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["failed"], 0);

    let out = Command::new(bin)
        .args(["soibelman-gap", "--type", "A", "--rank", "1", "--lambda", "1", "--q", "1/2", "--m", "1", "--n", "1"])
        .env("QFLAG_TRUNC_N", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g: qflag::formats::GapJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g.model.trunc, 7);

    let out = Command::new(bin).args(["qdim", "--type", "A"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
