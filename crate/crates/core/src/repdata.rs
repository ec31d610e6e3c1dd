//! Weight multiplicities `dim L(λ)_μ` of finite-dimensional irreducible
//! modules, with the classical dimension formula and the Weyl character
//! formula as independent checks.
//!
//! Multiplicities of dominant weights come from Freudenthal's recursion and
//! are spread over full Weyl orbits. Dominant weights of `L(λ)` are reached
//! from `λ` by subtracting positive roots while staying dominant (this walk
//! reaches every dominant `μ ≤ λ`).

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::qcalc::LaurentPoly;
use crate::rootsys::{RootSystem, Weight};
use crate::{Error, Rational, Result};

/// Multiplicities of all weights of `L(highest)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    highest: Weight,
    entries: BTreeMap<Weight, u64>,
}

impl WeightTable {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Dominant weights `μ ≤ λ`, ordered by increasing depth `ht(λ − μ)`.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    rs.require_dominant(lambda)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for alpha in rs.positive_roots() {
            let nu = &mu - alpha;
            if rs.is_dominant(&nu) && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(Rational, Weight)> = seen.into_iter().map(|m| (rs.height(&(lambda - &m)), m)).collect();
    out.sort();
    Ok(out.into_iter().map(|(_, m)| m).collect())
}

/// Freudenthal multiplicities on dominant weights.
fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let top = rs.inner_product(&lr, &lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in dominant_weights(rs, lambda)? {
        if &mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut acc = Rational::zero();
        for alpha in rs.positive_roots() {
            let mut nu = &mu + alpha;
            while rs.precedes(&nu, lambda) {
                let m = mult.get(&rs.dominant_representative(&nu)).copied().unwrap_or(0);
                if m > 0 {
                    acc += rs.inner_product(&nu, alpha) * (m as i64);
                }
                nu = &nu + alpha;
            }
        }
        let mr = &mu + &rho;
        let denom = top - rs.inner_product(&mr, &mr);
        let m = acc * 2 / denom;
        if !m.is_integer() || m < Rational::zero() {
            return Err(Error::InexactDivision);
        }
        let m = m.to_integer() as u64;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult)
}

/// Full weight table of `L(λ)` for dominant `λ`.
pub fn weight_table(rs: &RootSystem, lambda: &Weight) -> Result<WeightTable> {
    let dominant = dominant_multiplicities(rs, lambda)?;
    let mut entries = BTreeMap::new();
    for (mu, m) in &dominant {
        for nu in rs.orbit(mu) {
            entries.insert(nu, *m);
        }
    }
    Ok(WeightTable { highest: lambda.clone(), entries })
}

/// Classical Weyl dimension `∏_{α>0} (λ+ρ,α)/(ρ,α)`.
pub fn classical_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let mut v = Rational::one();
    for alpha in rs.positive_roots() {
        v *= rs.inner_product(&lr, alpha) / rs.inner_product(&rho, alpha);
    }
    if !v.is_integer() {
        return Err(Error::InexactDivision);
    }
    Ok(v.to_integer() as u64)
}

/// Quantum dimension from the Weyl character formula with `e(μ) = q^{2(μ,ρ)}`:
///
/// `Σ_w (−1)^{ℓ(w)} q^{2(w(λ+ρ)−ρ,ρ)} / ∏_{α>0} (1 − q^{−2(α,ρ)})`.
pub fn qdim_via_character(rs: &RootSystem, lambda: &Weight) -> Result<LaurentPoly> {
    rs.require_dominant(lambda)?;
    let rho = rs.weyl_vector();
    let rho_sq2 = rs.doubled_pairing(&rho, &rho);
    let lr = lambda + &rho;
    let mut numer = LaurentPoly::zero();
    for (_, w_lr, len) in rs.weyl_sweep(&rho, &lr) {
        let sign = if len % 2 == 0 { 1 } else { -1 };
        numer.add_term(rs.doubled_pairing(&w_lr, &rho) - rho_sq2, sign);
    }
    let denom: LaurentPoly = rs
        .positive_roots()
        .iter()
        .map(|a| LaurentPoly::from_terms([(0, 1), (-rs.doubled_pairing(a, &rho), -1)]))
        .product();
    numer.div_exact(&denom)
}

pub(crate) fn check_table(table: &WeightTable, lambda: &Weight) -> Result<()> {
    if table.highest() == lambda {
        Ok(())
    } else {
        Err(Error::TableMismatch { table: table.highest().to_string(), requested: lambda.to_string() })
    }
}
