//! The closed-subgroup invariant of product type actions of `SU_q(2)`.
//!
//! An action is described by the spins `ν` of the blocks of its
//! corepresentation and positive weights `c` scaling the density
//! `diag(q^{2ν}, q^{2ν−2}, …, q^{−2ν})` on each block. The invariant is the
//! subgroup of `ℝ × ℤ` generated by
//! `(log c_{ν_e}, 0)`, `(2 log c_{ν_o}, 0)` and `(log(c_{ν_o} q), 1)` over
//! integer spins `ν_e` and half-odd spins `ν_o`.
//!
//! All logarithms are [`ExactLog`]s, so the subgroup is a finitely generated
//! subgroup of `ℚ^P × ℤ` and its closure is decided by integer lattice rank:
//! the part over `0` is trivial (rank 0), cyclic (rank 1) or dense (rank ≥ 2).

mod exactlog;
mod lattice;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use exactlog::ExactLog;

use crate::qcalc::{check_domain_rational, QDomain};
use crate::{Error, Rational, Result};

/// One irreducible block `C^ν` with density weight `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    twice_spin: u32,
    weight: ExactLog,
}

impl Block {
    /// `spin` must lie in `½ℤ₊`; the weight is `base^exponent`.
    pub fn new(spin: Rational, base: Rational, exponent: Rational) -> Result<Self> {
        let twice = spin * 2;
        if !twice.is_integer() || twice.is_negative() {
            return Err(Error::InvalidAction(alloc::format!("spin {spin} is not in (1/2)Z+")));
        }
        Ok(Block { twice_spin: twice.to_integer() as u32, weight: ExactLog::new(base, exponent)? })
    }

    pub fn from_log(twice_spin: u32, weight: ExactLog) -> Self {
        Block { twice_spin, weight }
    }

    pub fn twice_spin(&self) -> u32 {
        self.twice_spin
    }

    pub fn spin(&self) -> Rational {
        Rational::new(self.twice_spin as i64, 2)
    }

    pub fn is_integer_spin(&self) -> bool {
        self.twice_spin.is_multiple_of(2)
    }

    pub fn weight(&self) -> &ExactLog {
        &self.weight
    }
}

/// Input datum of a product type action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpec {
    q: Rational,
    blocks: Vec<Block>,
}

impl ActionSpec {
    /// Checks `0 < q < 1`, the presence of both an integer and a half-odd
    /// spin, and that some integer-spin block carries weight `1`.
    pub fn new(q: Rational, blocks: Vec<Block>) -> Result<Self> {
        check_domain_rational(&q, QDomain::Standard)?;
        if !blocks.iter().any(Block::is_integer_spin) {
            return Err(Error::InvalidAction("no integer-spin block".into()));
        }
        if blocks.iter().all(Block::is_integer_spin) {
            return Err(Error::InvalidAction("no half-odd-integer-spin block".into()));
        }
        if !blocks.iter().any(|b| b.is_integer_spin() && b.weight.is_zero()) {
            return Err(Error::InvalidAction("no integer-spin block is normalized to weight 1".into()));
        }
        Ok(ActionSpec { q, blocks })
    }

    pub fn q(&self) -> Rational {
        self.q
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn log_q(&self) -> ExactLog {
        ExactLog::of(self.q).expect("q > 0")
    }
}

/// Element `(a, n)` of `ℝ × ℤ` with exact first coordinate.
pub type Generator = (ExactLog, i64);

/// `exponent · log(base)` as an [`ExactLog`].
pub fn exact_log(base: Rational, exponent: Rational) -> Result<ExactLog> {
    ExactLog::new(base, exponent)
}

/// Generators of the invariant, one or two per block, in block order.
pub fn invariant_group(spec: &ActionSpec) -> Vec<Generator> {
    let log_q = spec.log_q();
    let mut out = Vec::new();
    for b in &spec.blocks {
        if b.is_integer_spin() {
            out.push((b.weight.clone(), 0));
        } else {
            out.push((b.weight.scale(Rational::from_integer(2)), 0));
            out.push((b.weight.add(&log_q), 1));
        }
    }
    out
}

/// Generators `(log λ, 0)`, `(log μ, 1)` of `ℤ(log λ, 0) + ℤ(log μ, 1)`.
pub fn g_lambda_mu(lambda: &ExactLog, mu: &ExactLog) -> Vec<Generator> {
    alloc::vec![(lambda.clone(), 0), (mu.clone(), 1)]
}

/// Closure of the part of the group lying over `0 ∈ ℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kernel {
    Trivial,
    /// `ℤ·g` with `g < 0` (that is, `g = log λ` for some `0 < λ < 1`).
    Cyclic(ExactLog),
    DenseLine,
}

/// Canonical form of the closure of a finitely generated subgroup of `ℝ × ℤ`.
///
/// Equal closed subgroups have structurally equal canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSubgroup {
    /// `d` with second-coordinate projection `dℤ`.
    pub step: u64,
    pub kernel: Kernel,
    /// First coordinate of an element over `d`, reduced modulo the kernel;
    /// zero when the kernel is dense, absent when `d = 0`.
    pub coset: Option<ExactLog>,
}

impl fmt::Display for CanonicalSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match &self.kernel {
            Kernel::Trivial => String::from("0"),
            Kernel::Cyclic(g) => alloc::format!("Z {g}"),
            Kernel::DenseLine => String::from("R"),
        };
        match &self.coset {
            Some(c) => write!(f, "({k}) x 0 + Z ({c}, {})", self.step),
            None => write!(f, "({k}) x 0"),
        }
    }
}

/// Reduces `c` modulo `ℤg` to the representative with `⟨c,g⟩/⟨g,g⟩ ∈ [0,1)`
/// (inner product on prime-exponent vectors).
fn reduce_mod_cyclic(c: &ExactLog, g: &ExactLog) -> ExactLog {
    let dot = |a: &ExactLog, b: &ExactLog| {
        a.prime_exponents().iter().map(|(&p, r)| *r * b.coeff(p)).fold(Rational::zero(), |s, x| s + x)
    };
    let t = dot(c, g) / dot(g, g);
    c.sub(&g.scale(t.floor()))
}

/// Closure computation by integer row reduction of the generators.
pub fn canonicalize(generators: &[Generator]) -> CanonicalSubgroup {
    let mut primes: Vec<u64> = generators.iter().flat_map(|(l, _)| l.prime_exponents().keys().copied()).collect();
    primes.sort_unstable();
    primes.dedup();
    let scale = generators
        .iter()
        .flat_map(|(l, _)| l.prime_exponents().values().map(|r| *r.denom()))
        .fold(1i64, |a, b| a.lcm(&b));
    let rows: Vec<lattice::Row> = generators
        .iter()
        .map(|(l, n)| {
            let mut row = Vec::with_capacity(primes.len() + 1);
            row.push(*n as i128);
            row.extend(primes.iter().map(|&p| (l.coeff(p) * scale).to_integer() as i128));
            row
        })
        .collect();
    let to_log = |row: &[i128]| {
        ExactLog::from_prime_exponents(
            primes.iter().zip(row).map(|(&p, &v)| (p, Rational::new(v as i64, scale))),
        )
    };

    let mut rows = rows;
    let pivot = lattice::eliminate_column(&mut rows, 0);
    let kernel_rows: Vec<lattice::Row> = rows.into_iter().map(|r| r[1..].to_vec()).collect();
    let basis = lattice::echelon(kernel_rows);
    let kernel = match basis.len() {
        0 => Kernel::Trivial,
        1 => {
            let g = to_log(&basis[0]);
            Kernel::Cyclic(if g.signum() > 0 { g.scale(-Rational::one()) } else { g })
        }
        _ => Kernel::DenseLine,
    };
    let (step, coset) = match pivot {
        None => (0, None),
        Some(row) => {
            let c = to_log(&row[1..]);
            let c = match &kernel {
                Kernel::Trivial => c,
                Kernel::Cyclic(g) => reduce_mod_cyclic(&c, g),
                Kernel::DenseLine => ExactLog::zero(),
            };
            (row[0] as u64, Some(c))
        }
    };
    CanonicalSubgroup { step, kernel, coset }
}

/// Equality of closed subgroups given in canonical form.
pub fn subgroup_equal(a: &CanonicalSubgroup, b: &CanonicalSubgroup) -> bool {
    a == b
}

/// Module of the crossed-product automorphism in the type `III_λ` case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleClass {
    /// `mo(θ) = q`
    Q,
    /// `mo(θ) = λ^{1/2} q`
    SqrtLambdaQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Fixed point algebra of type `II₁`, ambient `III_q`, conjugate to the
    /// induced Powers flow.
    TypeII1PowersFlow,
    /// Fixed point algebra of type `III_λ`; `log_lambda` generates the kernel.
    TypeIIILambda { log_lambda: ExactLog, module: ModuleClass },
    /// Dense kernel: fixed point algebra of type `III₁`, unique up to conjugacy.
    TypeIII1Unique,
    Unclassified,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::TypeII1PowersFlow => "TypeII1_PowersFlow",
            Verdict::TypeIIILambda { .. } => "TypeIIIlambda",
            Verdict::TypeIII1Unique => "TypeIII1_Unique",
            Verdict::Unclassified => "OutsidePaperClassification",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub invariant: CanonicalSubgroup,
}

/// Decision table on the canonical invariant.
pub fn classify_action(spec: &ActionSpec) -> ClassificationResult {
    let invariant = canonicalize(&invariant_group(spec));
    let log_q = spec.log_q();
    let verdict = match (&invariant.step, &invariant.kernel, &invariant.coset) {
        (_, Kernel::DenseLine, _) => Verdict::TypeIII1Unique,
        (1, Kernel::Trivial, Some(c)) if *c == log_q => Verdict::TypeII1PowersFlow,
        (1, Kernel::Cyclic(g), Some(c)) => {
            let plain = reduce_mod_cyclic(&log_q, g);
            let half = reduce_mod_cyclic(&g.scale(Rational::new(1, 2)).add(&log_q), g);
            if *c == plain {
                Verdict::TypeIIILambda { log_lambda: g.clone(), module: ModuleClass::Q }
            } else if *c == half {
                Verdict::TypeIIILambda { log_lambda: g.clone(), module: ModuleClass::SqrtLambdaQ }
            } else {
                Verdict::Unclassified
            }
        }
        _ => Verdict::Unclassified,
    };
    ClassificationResult { verdict, invariant }
}
