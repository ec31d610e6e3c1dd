//! JSON forms of the core value types.
//!
//! Exact quantities keep exact encodings (integers, `"p/q"` strings, decimal
//! big-integer strings), so every document parses back to the value it came
//! from.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use qflag_core::classify::{
    ActionSpec, Block, CanonicalSubgroup, ClassificationResult, ExactLog, Kernel, ModuleClass, Verdict,
};
use qflag_core::haar::{HaarCrossCheck, HaarValue, OrthogonalityReport, PairKind};
use qflag_core::qcalc::{LaurentPoly, RationalFunction};
use qflag_core::repdata::WeightTable;
use qflag_core::rootsys::{RootSystem, Weight};
use qflag_core::soibelman::{CommutationReport, DiagonalModel, SpectralLine, Su2Operator};
use qflag_core::{Error, Rational, Result};
use serde::{Deserialize, Serialize};

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Comma-separated integers, e.g. `"1,0,-2"`.
pub fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("not an integer list: {s:?}"))))
        .collect()
}

pub fn format_coords(c: &[i64]) -> String {
    c.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    /// `[exponent, coefficient]` pairs sorted by exponent.
    pub terms: Vec<(i64, i64)>,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(p: &LaurentPoly) -> Self {
        LaurentJson { terms: p.terms().collect() }
    }
}

impl From<&LaurentJson> for LaurentPoly {
    fn from(j: &LaurentJson) -> Self {
        LaurentPoly::from_terms(j.terms.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub numerator: LaurentJson,
    pub denominator: LaurentJson,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(f: &RationalFunction) -> Self {
        RationalFunctionJson { numerator: f.numerator().into(), denominator: f.denominator().into() }
    }
}

impl RationalFunctionJson {
    pub fn to_value(&self) -> Result<RationalFunction> {
        RationalFunction::new((&self.numerator).into(), (&self.denominator).into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for ExactJson {
    fn from(v: &BigRational) -> Self {
        ExactJson { num: v.numer().to_string(), den: v.denom().to_string() }
    }
}

impl ExactJson {
    pub fn to_value(&self) -> Result<BigRational> {
        let p = |s: &str| s.parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {s:?}")));
        let den = p(&self.den)?;
        if den == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(p(&self.num)?, den))
    }
}

/// A scalar result: exact, floating, or floating with a truncation bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_exact: Option<ExactJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tail_bound: Option<f64>,
}

impl ValueJson {
    pub fn exact(v: &BigRational) -> Self {
        ValueJson { value_exact: Some(v.into()), value_float: None, tail_bound: None }
    }

    pub fn float(v: f64) -> Self {
        ValueJson { value_exact: None, value_float: Some(v), tail_bound: None }
    }
}

impl From<&HaarValue> for ValueJson {
    fn from(h: &HaarValue) -> Self {
        ValueJson { value_exact: None, value_float: Some(h.value), tail_bound: Some(h.tail_bound) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub weyl_vector: Vec<i64>,
    pub longest_element: Vec<usize>,
    pub positive_roots: Vec<Vec<i64>>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        RootSystemJson {
            lie_type: rs.lie_type().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().to_vec(),
            symmetrizers: rs.symmetrizers().to_vec(),
            weyl_vector: rs.weyl_vector().coords().to_vec(),
            longest_element: rs.longest_element().letters().to_vec(),
            positive_roots: rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect(),
        }
    }
}

/// Weight coordinates (as `"a,b,…"`) to multiplicity.
pub type WeightTableJson = BTreeMap<String, u64>;

pub fn weight_table_json(t: &WeightTable) -> WeightTableJson {
    t.entries().iter().map(|(w, &m)| (format_coords(w.coords()), m)).collect()
}

pub fn weight_table_entries(j: &WeightTableJson) -> Result<BTreeMap<Weight, u64>> {
    j.iter().map(|(k, &m)| Ok((Weight::new(parse_coords(k)?), m))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMatrixJson {
    /// `[exponent of q, multiplicity]`
    pub exponents: Vec<(i64, u64)>,
    pub diagonal: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheckJson {
    pub via_product: RationalFunctionJson,
    pub via_orthogonality: RationalFunctionJson,
    pub equal: bool,
}

impl From<&HaarCrossCheck> for CrossCheckJson {
    fn from(c: &HaarCrossCheck) -> Self {
        CrossCheckJson {
            via_product: (&c.via_product).into(),
            via_orthogonality: (&c.via_orthogonality).into(),
            equal: c.equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub label: String,
    pub trunc: usize,
    /// Row-major.
    pub matrix: Vec<f64>,
}

impl From<&Su2Operator> for OperatorJson {
    fn from(op: &Su2Operator) -> Self {
        OperatorJson { label: op.label().to_string(), trunc: op.trunc(), matrix: op.matrix().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalModelJson {
    pub exponents: Vec<u64>,
    pub q: f64,
    pub trunc: usize,
}

impl From<&DiagonalModel> for DiagonalModelJson {
    fn from(m: &DiagonalModel) -> Self {
        DiagonalModelJson { exponents: m.exponents(), q: m.q(), trunc: m.trunc() }
    }
}

impl DiagonalModelJson {
    /// Rebuilds a model with unit scales carrying the same exponents.
    pub fn to_value(&self) -> Result<DiagonalModel> {
        DiagonalModel::from_parts(self.exponents.clone(), vec![1; self.exponents.len()], self.q, self.trunc)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralLineJson {
    pub power: u64,
    pub value: f64,
    pub multiplicity: u64,
}

impl From<&SpectralLine> for SpectralLineJson {
    fn from(l: &SpectralLine) -> Self {
        SpectralLineJson { power: l.power, value: l.value, multiplicity: l.multiplicity }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub model: DiagonalModelJson,
    pub cutoff: f64,
    pub lines: Vec<SpectralLineJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapJson {
    pub model: DiagonalModelJson,
    pub m: u32,
    pub n: u32,
    pub gap: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityEntryJson {
    pub left: String,
    pub right: String,
    pub kind: String,
    pub computed: f64,
    pub predicted: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityJson {
    pub q: f64,
    pub trunc: usize,
    pub max_deviation: f64,
    pub entries: Vec<OrthogonalityEntryJson>,
}

impl From<&OrthogonalityReport> for OrthogonalityJson {
    fn from(r: &OrthogonalityReport) -> Self {
        OrthogonalityJson {
            q: r.q,
            trunc: r.trunc,
            max_deviation: r.max_deviation,
            entries: r
                .entries
                .iter()
                .map(|e| {
                    let (l, rr, kind) = match e.kind {
                        PairKind::ProductWithAdjoint => (e.left.symbol().to_string(), format!("{}*", e.right.symbol()), "product_with_adjoint"),
                        PairKind::AdjointWithProduct => (format!("{}*", e.left.symbol()), e.right.symbol().to_string(), "adjoint_with_product"),
                    };
                    OrthogonalityEntryJson {
                        left: l,
                        right: rr,
                        kind: kind.into(),
                        computed: e.computed,
                        predicted: e.predicted,
                        deviation: e.deviation,
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutationJson {
    pub ux_vs_qxu: f64,
    pub trivial_weight: f64,
    pub max_violation: f64,
    /// `[generator, exponent, violation]`
    pub twisted: Vec<(String, i64, f64)>,
}

impl From<&CommutationReport> for CommutationJson {
    fn from(r: &CommutationReport) -> Self {
        CommutationJson {
            ux_vs_qxu: r.ux_vs_qxu,
            trivial_weight: r.trivial_weight,
            max_violation: r.max_violation,
            twisted: r.twisted.iter().map(|l| (l.generator.clone(), l.exponent, l.violation)).collect(),
        }
    }
}

/// `base^exp` with both given as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerJson {
    pub base: String,
    pub exp: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub spin: String,
    pub c: PowerJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpecJson {
    pub q: String,
    pub blocks: Vec<BlockJson>,
}

impl ActionSpecJson {
    pub fn to_value(&self) -> Result<ActionSpec> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block::new(parse_rational(&b.spin)?, parse_rational(&b.c.base)?, parse_rational(&b.c.exp)?))
            .collect::<Result<Vec<_>>>()?;
        ActionSpec::new(parse_rational(&self.q)?, blocks)
    }
}

/// `log Π p^{r_p}` as `[[p, "r_p"], …]`, with a float value for reading.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactLogJson {
    pub primes: Vec<(u64, String)>,
    pub value: f64,
}

impl From<&ExactLog> for ExactLogJson {
    fn from(l: &ExactLog) -> Self {
        ExactLogJson {
            primes: l.prime_exponents().iter().map(|(&p, r)| (p, format_rational(r))).collect(),
            value: l.to_f64(),
        }
    }
}

impl ExactLogJson {
    pub fn to_value(&self) -> Result<ExactLog> {
        let pairs = self.primes.iter().map(|(p, r)| Ok((*p, parse_rational(r)?))).collect::<Result<Vec<_>>>()?;
        Ok(ExactLog::from_prime_exponents(pairs))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KernelJson {
    Trivial,
    Cyclic { generator: ExactLogJson },
    DenseLine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub step: u64,
    pub kernel: KernelJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coset: Option<ExactLogJson>,
}

impl From<&CanonicalSubgroup> for SubgroupJson {
    fn from(c: &CanonicalSubgroup) -> Self {
        SubgroupJson {
            step: c.step,
            kernel: match &c.kernel {
                Kernel::Trivial => KernelJson::Trivial,
                Kernel::Cyclic(g) => KernelJson::Cyclic { generator: g.into() },
                Kernel::DenseLine => KernelJson::DenseLine,
            },
            coset: c.coset.as_ref().map(Into::into),
        }
    }
}

impl SubgroupJson {
    pub fn to_value(&self) -> Result<CanonicalSubgroup> {
        Ok(CanonicalSubgroup {
            step: self.step,
            kernel: match &self.kernel {
                KernelJson::Trivial => Kernel::Trivial,
                KernelJson::Cyclic { generator } => Kernel::Cyclic(generator.to_value()?),
                KernelJson::DenseLine => Kernel::DenseLine,
            },
            coset: self.coset.as_ref().map(ExactLogJson::to_value).transpose()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<ExactLogJson>,
    /// `"q"` or `"sqrt_lambda_q"` for the type III_λ verdict.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub module: Option<String>,
    pub invariant: SubgroupJson,
}

impl From<&ClassificationResult> for ClassificationJson {
    fn from(c: &ClassificationResult) -> Self {
        let (lambda, module) = match &c.verdict {
            Verdict::TypeIIILambda { log_lambda, module } => (
                Some(log_lambda.into()),
                Some(match module {
                    ModuleClass::Q => "q".to_string(),
                    ModuleClass::SqrtLambdaQ => "sqrt_lambda_q".to_string(),
                }),
            ),
            _ => (None, None),
        };
        ClassificationJson { verdict: c.verdict.name().to_string(), lambda, module, invariant: (&c.invariant).into() }
    }
}

impl ClassificationJson {
    pub fn to_value(&self) -> Result<ClassificationResult> {
        let verdict = match self.verdict.as_str() {
            "TypeII1_PowersFlow" => Verdict::TypeII1PowersFlow,
            "TypeIII1_Unique" => Verdict::TypeIII1Unique,
            "OutsidePaperClassification" => Verdict::Unclassified,
            "TypeIIIlambda" => {
                let lambda = self.lambda.as_ref().ok_or_else(|| Error::Parse("missing lambda".into()))?;
                let module = match self.module.as_deref() {
                    Some("q") => ModuleClass::Q,
                    Some("sqrt_lambda_q") => ModuleClass::SqrtLambdaQ,
                    other => return Err(Error::Parse(format!("unknown module {other:?}"))),
                };
                Verdict::TypeIIILambda { log_lambda: lambda.to_value()?, module }
            }
            other => return Err(Error::Parse(format!("unknown verdict {other:?}"))),
        };
        Ok(ClassificationResult { verdict, invariant: self.invariant.to_value()? })
    }
}
