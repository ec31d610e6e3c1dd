//! The `qflag` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qflag_core::classify::classify_action;
use qflag_core::haar::{haar_a_lambda_sq, haar_diag_mass, haar_p0, su2_haar_eval, su2_orthogonality_suite};
use qflag_core::qcalc::{
    f_matrix_diagonal, f_matrix_exponents, quantum_dim_product, quantum_dim_weight_sum, LaurentPoly, QDomain,
};
use qflag_core::repdata::{qdim_via_character, weight_table};
use qflag_core::rootsys::{LieType, RootSystem, Series, Weight, WeylWord};
use qflag_core::soibelman::{diagonal_model, power_norm_gap, spectrum};
use qflag_core::{Error, Rational};
use serde::Serialize;
use serde_json::Value;

use crate::formats::{
    parse_coords, parse_rational, ActionSpecJson, ClassificationJson, CrossCheckJson, DiagonalModelJson,
    FMatrixJson, GapJson, LaurentJson, OrthogonalityJson, RootSystemJson, SpectrumJson, ValueJson,
};
use crate::selftest;

pub const DEFAULT_TRUNC: usize = 32;
pub const TRUNC_ENV: &str = "QFLAG_TRUNC_N";

#[derive(Debug, Parser)]
#[command(name = "qflag", version, about = "Quantum flag manifolds, Haar states and product type actions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Cartan type series letter (A-G).
    #[arg(long = "type")]
    series: char,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct QArgs {
    /// Deformation parameter as "p/q" (a float with --float).
    #[arg(long)]
    q: Option<String>,
    /// Accept --q as a float and report floating values.
    #[arg(long)]
    float: bool,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Dominant weight as comma-separated fundamental-weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Reduced word as comma-separated 1-based letters; defaults to w0.
    #[arg(long)]
    word: Option<String>,
    #[command(flatten)]
    q: QArgs,
    /// Truncation per tensor factor.
    #[arg(long)]
    trunc: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QdimMethod {
    Product,
    WeightSum,
    Character,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan data, w0 and positive roots.
    Rootsys(TypeArgs),
    /// Weight multiplicities of an irreducible module.
    Weights {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Quantum dimension as a Laurent polynomial.
    Qdim {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = QdimMethod::Product)]
        method: QdimMethod,
        #[command(flatten)]
        q: QArgs,
        /// Evaluate at --q instead of printing the polynomial.
        #[arg(long)]
        eval: bool,
    },
    /// Spectrum of the Woronowicz character matrix F.
    Fmatrix {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Haar measure of the minimal projection p0.
    HaarP0 {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        q: QArgs,
        #[arg(long)]
        eval: bool,
    },
    /// h(|a_lambda|^2) by the product and orthogonality formulas.
    HaarAlambda {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Haar measure of the diagonal projection p_m.
    HaarDiag {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated occupation numbers, one per positive root.
        #[arg(long)]
        m: String,
        #[command(flatten)]
        q: QArgs,
        #[arg(long)]
        eval: bool,
    },
    /// Haar state of a word in x, u, v, y (append * for adjoints).
    Su2Haar {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        q: QArgs,
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Orthogonality relations of the fundamental corepresentation of SU_q(2).
    Su2Ortho {
        #[command(flatten)]
        q: QArgs,
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Eigenvalues of the diagonal model of |a_lambda|.
    SoibelmanSpectrum {
        #[command(flatten)]
        model: ModelArgs,
        /// Smallest eigenvalue reported; defaults to q^12.
        #[arg(long)]
        cutoff: Option<String>,
    },
    /// Norm of |a_lambda|^m - |a_lambda|^n in the diagonal model.
    SoibelmanGap {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Classify a product type action of SU_q(2) from a JSON spec.
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run the built-in invariant suite.
    Selftest,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for --{flag}: {msg}"))
}

fn parse_failure(flag: &str, e: Error) -> Failure {
    match e {
        Error::Parse(m) => usage(flag, m),
        other => usage(flag, other),
    }
}

fn root_system(ty: &TypeArgs) -> std::result::Result<RootSystem, Failure> {
    let series = Series::from_char(ty.series).map_err(|e| usage("type", e))?;
    Ok(RootSystem::new(LieType::new(series, ty.rank)?)?)
}

fn coords(flag: &str, s: &str) -> std::result::Result<Vec<i64>, Failure> {
    parse_coords(s).map_err(|e| parse_failure(flag, e))
}

fn weight(rs: &RootSystem, s: &str) -> std::result::Result<Weight, Failure> {
    let c = coords("lambda", s)?;
    if c.len() != rs.rank() {
        return Err(usage("lambda", format!("expected {} coordinates, got {}", rs.rank(), c.len())));
    }
    Ok(Weight::new(c))
}

fn require_q(q: &QArgs) -> std::result::Result<&str, Failure> {
    q.q.as_deref().ok_or_else(|| Failure::Usage("missing --q".into()))
}

fn exact_q(q: &QArgs) -> std::result::Result<Rational, Failure> {
    parse_rational(require_q(q)?).map_err(|e| parse_failure("q", e))
}

/// `q` as a float: parsed directly under `--float`, else from a rational.
fn float_q(q: &QArgs) -> std::result::Result<f64, Failure> {
    let s = require_q(q)?;
    if q.float {
        s.trim().parse::<f64>().map_err(|e| usage("q", e))
    } else {
        let r = parse_rational(s).map_err(|e| parse_failure("q", e))?;
        Ok(*r.numer() as f64 / *r.denom() as f64)
    }
}

fn trunc(flag: Option<usize>) -> std::result::Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(TRUNC_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("invalid {TRUNC_ENV}: {s:?}"))),
        Err(_) => Ok(DEFAULT_TRUNC),
    }
}

fn json<T: Serialize>(v: &T) -> Outcome {
    Ok(serde_json::to_value(v).expect("serializable output"))
}

/// The polynomial itself, or its value at `--q` when `--eval` is set.
fn poly_or_value(p: &LaurentPoly, q: &QArgs, eval: bool) -> Outcome {
    if !eval {
        return json(&LaurentJson::from(p));
    }
    if q.float {
        json(&ValueJson::float(p.eval_f64(float_q(q)?, QDomain::Standard)?))
    } else {
        json(&ValueJson::exact(&p.eval_rational(&exact_q(q)?, QDomain::Standard)?))
    }
}

fn model(args: &ModelArgs) -> std::result::Result<qflag_core::soibelman::DiagonalModel, Failure> {
    let rs = root_system(&args.ty)?;
    let lambda = weight(&rs, &args.lambda)?;
    let w = match &args.word {
        Some(s) => {
            let letters = coords("word", s)?;
            if letters.iter().any(|&i| i < 1 || i as usize > rs.rank()) {
                return Err(usage("word", format!("letters must lie in 1..={}", rs.rank())));
            }
            WeylWord::new(letters.into_iter().map(|i| i as usize).collect())
        }
        None => rs.longest_element().clone(),
    };
    Ok(diagonal_model(&rs, &lambda, &w, float_q(&args.q)?, trunc(args.trunc)?)?)
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Rootsys(ty) => json(&RootSystemJson::from(&root_system(ty)?)),
        Command::Weights { ty, lambda } => {
            let rs = root_system(ty)?;
            json(&crate::formats::weight_table_json(&weight_table(&rs, &weight(&rs, lambda)?)?))
        }
        Command::Qdim { ty, lambda, method, q, eval } => {
            let rs = root_system(ty)?;
            let l = weight(&rs, lambda)?;
            let p = match method {
                QdimMethod::Product => quantum_dim_product(&rs, &l)?,
                QdimMethod::WeightSum => quantum_dim_weight_sum(&rs, &l, &weight_table(&rs, &l)?)?,
                QdimMethod::Character => qdim_via_character(&rs, &l)?,
            };
            poly_or_value(&p, q, *eval)
        }
        Command::Fmatrix { ty, lambda } => {
            let rs = root_system(ty)?;
            let l = weight(&rs, lambda)?;
            let spec = f_matrix_exponents(&rs, &l, &weight_table(&rs, &l)?)?;
            json(&FMatrixJson {
                exponents: spec.iter().map(|(&e, &m)| (e, m)).collect(),
                diagonal: f_matrix_diagonal(&spec),
            })
        }
        Command::HaarP0 { ty, q, eval } => poly_or_value(&haar_p0(&root_system(ty)?), q, *eval),
        Command::HaarAlambda { ty, lambda } => {
            let rs = root_system(ty)?;
            json(&CrossCheckJson::from(&haar_a_lambda_sq(&rs, &weight(&rs, lambda)?)?))
        }
        Command::HaarDiag { ty, m, q, eval } => {
            let rs = root_system(ty)?;
            let m = coords("m", m)?;
            if m.iter().any(|&x| x < 0) {
                return Err(usage("m", "occupation numbers must be non-negative"));
            }
            let m: Vec<u64> = m.into_iter().map(|x| x as u64).collect();
            poly_or_value(&haar_diag_mass(&rs, &m)?, q, *eval)
        }
        Command::Su2Haar { word, q, trunc: t } => {
            json(&ValueJson::from(&su2_haar_eval(word, float_q(q)?, trunc(*t)?)?))
        }
        Command::Su2Ortho { q, trunc: t } => {
            json(&OrthogonalityJson::from(&su2_orthogonality_suite(float_q(q)?, trunc(*t)?)?))
        }
        Command::SoibelmanSpectrum { model: args, cutoff } => {
            let m = model(args)?;
            let cutoff = match cutoff {
                Some(s) if args.q.float => s.trim().parse::<f64>().map_err(|e| usage("cutoff", e))?,
                Some(s) => {
                    let r = parse_rational(s).map_err(|e| parse_failure("cutoff", e))?;
                    *r.numer() as f64 / *r.denom() as f64
                }
                None => m.q().powi(12),
            };
            let lines = spectrum(&m, cutoff)?;
            json(&SpectrumJson {
                model: DiagonalModelJson::from(&m),
                cutoff,
                lines: lines.iter().map(Into::into).collect(),
            })
        }
        Command::SoibelmanGap { model: args, m, n } => {
            let model = model(args)?;
            let gap = power_norm_gap(&model, *m, *n)?;
            json(&GapJson { model: DiagonalModelJson::from(&model), m: *m, n: *n, gap, bound: model.q().powi(*m as i32) })
        }
        Command::Classify { spec } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Failure::Usage(format!("invalid value for --spec: {}: {e}", spec.display())))?;
            let parsed: ActionSpecJson = serde_json::from_str(&text).map_err(|e| usage("spec", e))?;
            json(&ClassificationJson::from(&classify_action(&parsed.to_value()?)))
        }
        Command::Selftest => unreachable!("handled by run"),
    }
}

/// Aligned `path  value` lines for a JSON document.
pub fn render_table(v: &Value) -> String {
    fn walk(prefix: String, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(p, x, out);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in items.iter().enumerate() {
                    walk(format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::String(s) => out.push((prefix, s.clone())),
            other => out.push((prefix, other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk(String::new(), v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
}

/// Runs one invocation; returns the process exit code
/// (0 success, 1 domain error, 2 usage error).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Command::Selftest = cli.command {
        let report = selftest::run_suite();
        let _ = match cli.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("serializable report")),
            Format::Table => write!(out, "{}", report.to_table()),
        };
        return if report.failed == 0 { 0 } else { 1 };
    }
    match dispatch(&cli.command) {
        Ok(v) => {
            let _ = match cli.format {
                Format::Json => writeln!(out, "{v}"),
                Format::Table => write!(out, "{}", render_table(&v)),
            };
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
