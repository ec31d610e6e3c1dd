//! Haar-state values on `C(G_q)`.
//!
//! With `L^∞(G_q) = L^∞(T) ⊗ L^∞(T\G_q)` the Haar state is
//! `h = h(p₀) ∫_T dt ⊗ Tr(|a_ρ|² ·)`, and `π_{w₀}` identifies the flag-manifold
//! factor with `B(ℓ²(ℤ₊)^{⊗k})`. On diagonal elements everything is a product
//! of geometric series, so values are returned as exact Laurent data. For
//! `SU_q(2)` full words in the generators are evaluated numerically: the torus
//! average is the projection onto the weight-zero graded component and the
//! density is `(1 − q²) diag(q^{2k})`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::BigRational;


use crate::qcalc::{self, LaurentPoly, QDomain, RationalFunction};
use crate::repdata::weight_table;
use crate::rootsys::{RootSystem, Weight};
use crate::soibelman::{check_q_and_trunc, su2_generators, Su2Generators, Su2Operator};
use crate::{Error, Rational, Result};

/// `∏_{α>0} (1 − q^{2(α,ρ)})`.
pub fn haar_p0(rs: &RootSystem) -> LaurentPoly {
    let rho = rs.weyl_vector();
    rs.positive_roots()
        .iter()
        .map(|a| LaurentPoly::from_terms([(0, 1), (2 * rs.root_pairing(&rho, a), -1)]))
        .product()
}

/// Haar data of a root system: `h(p₀)` and the exponents of the density
/// `|a_ρ|²` on each tensor factor, `2(ρ, β_ℓ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarDatum {
    h_p0: LaurentPoly,
    density_exponents: Vec<u64>,
}

impl HaarDatum {
    pub fn new(rs: &RootSystem) -> Self {
        let rho = rs.weyl_vector();
        let density_exponents =
            rs.positive_roots().iter().map(|b| 2 * rs.root_pairing(&rho, b) as u64).collect();
        HaarDatum { h_p0: haar_p0(rs), density_exponents }
    }

    pub fn h_p0(&self) -> &LaurentPoly {
        &self.h_p0
    }

    pub fn density_exponents(&self) -> &[u64] {
        &self.density_exponents
    }

    /// `h(p_{m_1} ⊗ ⋯ ⊗ p_{m_k}) = h(p₀) ∏_ℓ q^{2 m_ℓ (ρ, β_ℓ)}`.
    pub fn diag_mass(&self, m: &[u64]) -> Result<LaurentPoly> {
        if m.len() != self.density_exponents.len() {
            return Err(Error::LengthMismatch { expected: self.density_exponents.len(), got: m.len() });
        }
        let shift: u64 = m.iter().zip(&self.density_exponents).map(|(a, b)| a * b).sum();
        Ok(self.h_p0.shift(shift as i64))
    }

    /// Exact total mass of the grid `[0,N)^k`:
    /// `h(p₀) ∏_ℓ (1 − q^{2(ρ,β_ℓ)N}) / (1 − q^{2(ρ,β_ℓ)})`.
    pub fn truncated_total(&self, q: &Rational, trunc: u32) -> Result<BigRational> {
        qcalc::check_domain_rational(q, QDomain::Standard)?;
        let mut num = self.h_p0.clone();
        let mut den = LaurentPoly::one();
        for &e in &self.density_exponents {
            let e = e as i64;
            num = &num * &LaurentPoly::from_terms([(0, 1), (e * trunc as i64, -1)]);
            den = &den * &LaurentPoly::from_terms([(0, 1), (e, -1)]);
        }
        Ok(num.eval_rational(q, QDomain::Standard)? / den.eval_rational(q, QDomain::Standard)?)
    }
}

pub fn haar_diag_mass(rs: &RootSystem, m: &[u64]) -> Result<LaurentPoly> {
    HaarDatum::new(rs).diag_mass(m)
}

/// `h(|a_λ|²)` computed two ways.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarCrossCheck {
    /// `h(p₀) ∏_{α>0} (1 − q^{2(λ+ρ,α)})^{-1}`
    pub via_product: RationalFunction,
    /// `(dim_q L(λ))^{-1} q^{-2(λ,ρ)}`, with `dim_q` from the weight table
    pub via_orthogonality: RationalFunction,
    pub equal: bool,
}

pub fn haar_a_lambda_sq(rs: &RootSystem, lambda: &Weight) -> Result<HaarCrossCheck> {
    rs.require_dominant(lambda)?;
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let den: LaurentPoly = rs
        .positive_roots()
        .iter()
        .map(|a| LaurentPoly::from_terms([(0, 1), (2 * rs.root_pairing(&lr, a), -1)]))
        .product();
    let via_product = RationalFunction::new(haar_p0(rs), den)?;

    let table = weight_table(rs, lambda)?;
    let qdim = qcalc::quantum_dim_weight_sum(rs, lambda, &table)?;
    let via_orthogonality = RationalFunction::new(LaurentPoly::one(), qdim.shift(rs.doubled_pairing(lambda, &rho)))?;
    let equal = via_product == via_orthogonality;
    Ok(HaarCrossCheck { via_product, via_orthogonality, equal })
}

/// Generators of `C(SU_q(2))` and their adjoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    U,
    V,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::X, Generator::U, Generator::V, Generator::Y];

    /// Torus weight in units of `ω_1`: the row weight `ω_1` or `s_1 ω_1`.
    pub fn weight(self) -> i64 {
        match self {
            Generator::X | Generator::U => 1,
            Generator::V | Generator::Y => -1,
        }
    }

    /// `(row, column)` in the fundamental corepresentation, 0 ↔ `ω_1`, 1 ↔ `s_1ω_1`.
    pub fn position(self) -> (usize, usize) {
        match self {
            Generator::X => (0, 0),
            Generator::U => (0, 1),
            Generator::V => (1, 0),
            Generator::Y => (1, 1),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::U => 'u',
            Generator::V => 'v',
            Generator::Y => 'y',
        }
    }

    fn operator(self, g: &Su2Generators) -> &Su2Operator {
        match self {
            Generator::X => &g.x,
            Generator::U => &g.u,
            Generator::V => &g.v,
            Generator::Y => &g.y,
        }
    }
}

/// A generator or its adjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub adjoint: bool,
}

impl Letter {
    pub fn weight(self) -> i64 {
        if self.adjoint {
            -self.generator.weight()
        } else {
            self.generator.weight()
        }
    }
}

/// Parses words such as `"x x*"`, `"u*u"` or `"xy*v"`; whitespace is ignored.
pub fn parse_word(word: &str) -> Result<Vec<Letter>> {
    let mut out: Vec<Letter> = Vec::new();
    for ch in word.chars() {
        let generator = match ch {
            'x' => Generator::X,
            'u' => Generator::U,
            'v' => Generator::V,
            'y' => Generator::Y,
            '*' => {
                match out.last_mut() {
                    Some(l) if !l.adjoint => l.adjoint = true,
                    _ => return Err(Error::Parse(word.to_string())),
                }
                continue;
            }
            c if c.is_whitespace() => continue,
            _ => return Err(Error::Parse(word.to_string())),
        };
        out.push(Letter { generator, adjoint: false });
    }
    Ok(out)
}

pub fn word_to_string(word: &[Letter]) -> String {
    let mut s = String::new();
    for (k, l) in word.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        s.push(l.generator.symbol());
        if l.adjoint {
            s.push('*');
        }
    }
    s
}

/// Element of the truncated model of `C(SU_q(2))` split by torus weight.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSu2Element {
    trunc: usize,
    /// longest word used to build the element, for the truncation bound
    degree: usize,
    components: BTreeMap<i64, Su2Operator>,
}

impl GradedSu2Element {
    pub fn scalar(c: f64, trunc: usize) -> Self {
        let mut components = BTreeMap::new();
        components.insert(0, Su2Operator::identity(trunc).scaled(c));
        GradedSu2Element { trunc, degree: 0, components }
    }

    pub fn from_word(word: &[Letter], gens: &Su2Generators) -> Self {
        let trunc = gens.x.trunc();
        let mut op = Su2Operator::identity(trunc);
        let mut weight = 0;
        for l in word {
            let g = l.generator.operator(gens);
            let g = if l.adjoint { g.adjoint() } else { g.clone() };
            op = op.compose(&g);
            weight += l.weight();
        }
        let mut components = BTreeMap::new();
        components.insert(weight, op);
        GradedSu2Element { trunc, degree: word.len(), components }
    }

    pub fn components(&self) -> &BTreeMap<i64, Su2Operator> {
        &self.components
    }

    pub fn add(&self, rhs: &GradedSu2Element) -> Self {
        let mut components = self.components.clone();
        for (w, op) in &rhs.components {
            let merged = match components.remove(w) {
                Some(cur) => cur.sub(&op.scaled(-1.0)),
                None => op.clone(),
            };
            components.insert(*w, merged);
        }
        GradedSu2Element { trunc: self.trunc, degree: self.degree.max(rhs.degree), components }
    }

    /// Weights add under multiplication.
    pub fn mul(&self, rhs: &GradedSu2Element) -> Self {
        let mut out: BTreeMap<i64, Su2Operator> = BTreeMap::new();
        for (w1, a) in &self.components {
            for (w2, b) in &rhs.components {
                let p = a.compose(b);
                let slot = out.remove(&(w1 + w2));
                out.insert(w1 + w2, match slot {
                    Some(cur) => cur.sub(&p.scaled(-1.0)),
                    None => p,
                });
            }
        }
        GradedSu2Element { trunc: self.trunc, degree: self.degree + rhs.degree, components: out }
    }

    /// The adjoint negates weights.
    pub fn adjoint(&self) -> Self {
        let components = self.components.iter().map(|(w, op)| (-w, op.adjoint())).collect();
        GradedSu2Element { trunc: self.trunc, degree: self.degree, components }
    }

    /// `E_γ`: the torus average keeps the weight-zero component.
    pub fn torus_average(&self) -> Option<&Su2Operator> {
        self.components.get(&0)
    }

    /// Haar state through the density `(1 − q²) diag(q^{2k})`.
    pub fn haar(&self, q: f64) -> Result<HaarValue> {
        check_q_and_trunc(q, self.trunc, 2)?;
        let Some(op) = self.torus_average() else {
            return Ok(HaarValue { value: 0.0, tail_bound: 0.0 });
        };
        let q2 = q * q;
        let mut weight = 1.0 - q2;
        let mut value = 0.0;
        for d in op.diag() {
            value += weight * d;
            weight *= q2;
        }
        // rows k >= N - degree feel the truncation, and the series tail starts at N
        let first_bad = self.trunc.saturating_sub(self.degree.max(1));
        let tail_bound = libm::pow(q2, first_bad as f64) * op.norm_bound().max(1.0) * 2.0;
        Ok(HaarValue { value, tail_bound })
    }
}

/// Truncated Haar value with an a-priori bound on the truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarValue {
    pub value: f64,
    pub tail_bound: f64,
}

pub fn su2_haar_eval(word: &str, q: f64, trunc: usize) -> Result<HaarValue> {
    check_q_and_trunc(q, trunc, 8)?;
    let letters = parse_word(word)?;
    if letters.iter().map(|l| l.weight()).sum::<i64>() != 0 {
        return Ok(HaarValue { value: 0.0, tail_bound: 0.0 });
    }
    let gens = su2_generators(q, trunc)?;
    GradedSu2Element::from_word(&letters, &gens).haar(q)
}

/// Which of the two orthogonality displays a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `h(g₁ g₂*)`
    ProductWithAdjoint,
    /// `h(g₁* g₂)`
    AdjointWithProduct,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityEntry {
    pub left: Generator,
    pub right: Generator,
    pub kind: PairKind,
    pub computed: f64,
    pub predicted: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub q: f64,
    pub trunc: usize,
    pub entries: Vec<OrthogonalityEntry>,
    pub max_deviation: f64,
}

/// Checks all 32 products `h(g₁ g₂*)`, `h(g₁* g₂)` against
/// `h(v_ij v_kl*) = δ_ik F_{lj} / dim_q` and `h(v_ij* v_kl) = δ_jl (F^{-1})_{ki} / dim_q`
/// for the fundamental corepresentation, `F = diag(q^{2(ω_1,ρ)}, q^{2(s_1ω_1,ρ)})`.
pub fn su2_orthogonality_suite(q: f64, trunc: usize) -> Result<OrthogonalityReport> {
    check_q_and_trunc(q, trunc, 8)?;
    let a1 = RootSystem::from_label("A1")?;
    let rho = a1.weyl_vector();
    let top = Weight::fundamental(1, 1);
    let rows = [top.clone(), a1.simple_reflection(1, &top)?];
    let f: Vec<f64> = rows.iter().map(|mu| libm::pow(q, a1.doubled_pairing(mu, &rho) as f64)).collect();
    let table = weight_table(&a1, &top)?;
    let dim_q = qcalc::quantum_dim_weight_sum(&a1, &top, &table)?.eval_f64(q, QDomain::Standard)?;

    let gens = su2_generators(q, trunc)?;
    let mut entries = Vec::with_capacity(32);
    for kind in [PairKind::ProductWithAdjoint, PairKind::AdjointWithProduct] {
        for left in Generator::ALL {
            for right in Generator::ALL {
                let (i, j) = left.position();
                let (k, l) = right.position();
                let (word, predicted) = match kind {
                    PairKind::ProductWithAdjoint => (
                        [Letter { generator: left, adjoint: false }, Letter { generator: right, adjoint: true }],
                        if i == k && l == j { f[j] / dim_q } else { 0.0 },
                    ),
                    PairKind::AdjointWithProduct => (
                        [Letter { generator: left, adjoint: true }, Letter { generator: right, adjoint: false }],
                        if j == l && k == i { 1.0 / (f[i] * dim_q) } else { 0.0 },
                    ),
                };
                let computed = GradedSu2Element::from_word(&word, &gens).haar(q)?.value;
                entries.push(OrthogonalityEntry {
                    left,
                    right,
                    kind,
                    computed,
                    predicted,
                    deviation: (computed - predicted).abs(),
                });
            }
        }
    }
    let max_deviation = entries.iter().map(|e| e.deviation).fold(0.0, f64::max);
    Ok(OrthogonalityReport { q, trunc, entries, max_deviation })
}
