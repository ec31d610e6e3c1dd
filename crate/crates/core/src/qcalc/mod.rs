//! Exact q-arithmetic: q-integers, q-Pochhammer symbols, quantum dimensions,
//! exponents of the Woronowicz character and of the modular and scaling
//! groups, and the torus pairing.
//!
//! Every exponent `2(μ,ρ)` that appears is an integer, so quantum dimensions
//! are honest integer Laurent polynomials in `q`.

mod laurent;
mod ratfunc;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;

pub use laurent::{big_to_f64, LaurentPoly, QDomain};
pub use ratfunc::RationalFunction;

pub(crate) use laurent::{check_domain_f64, check_domain_rational};

use crate::repdata::{check_table, WeightTable};
use crate::rootsys::{RootSystem, Weight};
use crate::{Error, Result};

/// Symmetric q-integer `[n]_q = (q^{-n} − q^n)/(q^{-1} − q)`.
pub fn q_integer(n: i64) -> LaurentPoly {
    let sign = n.signum();
    let m = n.abs();
    LaurentPoly::from_terms((0..m).map(|k| (-(m - 1) + 2 * k, sign)))
}

/// `(a; t)_m = ∏_{j<m} (1 − a t^j)` with `a = q^{a_exp}`, `t = q^{t_exp}`.
pub fn q_pochhammer(a_exp: i64, t_exp: u32, m: u32) -> LaurentPoly {
    (0..m as i64)
        .map(|j| LaurentPoly::from_terms([(0, 1), (a_exp + j * t_exp as i64, -1)]))
        .product()
}

/// `∏_{α>0} [(λ+ρ,α)]_q / [(ρ,α)]_q`, divided exactly.
pub fn quantum_dim_product(rs: &RootSystem, lambda: &Weight) -> Result<LaurentPoly> {
    rs.require_dominant(lambda)?;
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for alpha in rs.positive_roots() {
        num = &num * &q_integer(rs.root_pairing(&lr, alpha));
        den = &den * &q_integer(rs.root_pairing(&rho, alpha));
    }
    num.div_exact(&den)
}

/// `Σ_μ dim L(λ)_μ q^{2(μ,ρ)}` over the weight table of `L(λ)`.
pub fn quantum_dim_weight_sum(rs: &RootSystem, lambda: &Weight, table: &WeightTable) -> Result<LaurentPoly> {
    check_table(table, lambda)?;
    let rho = rs.weyl_vector();
    let mut out = LaurentPoly::zero();
    for (mu, &m) in table.entries() {
        out.add_term(rs.doubled_pairing(mu, &rho), m as i64);
    }
    Ok(out)
}

/// Spectrum of `F_λ = diag(q^{2(μ,ρ)})`: exponent `2(μ,ρ)` mapped to its
/// total multiplicity.
pub fn f_matrix_exponents(rs: &RootSystem, lambda: &Weight, table: &WeightTable) -> Result<BTreeMap<i64, u64>> {
    check_table(table, lambda)?;
    let rho = rs.weyl_vector();
    let mut out = BTreeMap::new();
    for (mu, &m) in table.entries() {
        *out.entry(rs.doubled_pairing(mu, &rho)).or_insert(0) += m;
    }
    Ok(out)
}

/// Exponents of the modular group `σ_t` and the scaling group `τ_t` on the
/// matrix coefficient `C^λ_{ξ_μ, ξ_ν}`: both act by `q^{(·) i t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentPair {
    /// `2(μ+ν, ρ)`
    pub modular: i64,
    /// `2(μ−ν, ρ)`
    pub scaling: i64,
}

pub fn one_param_exponents(rs: &RootSystem, mu: &Weight, nu: &Weight) -> ExponentPair {
    let rho = rs.weyl_vector();
    ExponentPair {
        modular: rs.doubled_pairing(&(mu + nu), &rho),
        scaling: rs.doubled_pairing(&(mu - nu), &rho),
    }
}

/// `⟨t, μ⟩ = t_1^{μ(h_1)} ⋯ t_n^{μ(h_n)}` for `t` in the maximal torus.
pub fn torus_character(t: &[Complex64], mu: &Weight) -> Result<Complex64> {
    if t.len() != mu.rank() {
        return Err(Error::LengthMismatch { expected: mu.rank(), got: t.len() });
    }
    for (index, z) in t.iter().enumerate() {
        // |z|^2 − 1 ≈ 2(|z| − 1)
        if (z.norm_sqr() - 1.0).abs() > 2e-12 {
            return Err(Error::NonUnitModulus { index });
        }
    }
    Ok(t.iter().zip(mu.coords()).fold(Complex64::new(1.0, 0.0), |acc, (z, &e)| {
        let base = if e < 0 { z.conj() } else { *z };
        acc * base.powu(e.unsigned_abs() as u32)
    }))
}

/// Convenience: the exponents of `F_λ` as a flat list with multiplicity.
pub fn f_matrix_diagonal(spectrum: &BTreeMap<i64, u64>) -> Vec<i64> {
    spectrum.iter().flat_map(|(&e, &m)| core::iter::repeat_n(e, m as usize)).collect()
}
