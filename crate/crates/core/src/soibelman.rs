//! Truncated operator models.
//!
//! * The irreducible representation of `C(SU_q(2))` on `ℓ²(ℤ₊)`, cut down to
//!   `span{ε_0, …, ε_{N−1}}` (components leaving the span are dropped).
//! * The diagonal model of `π_{w₀}(|a_λ|)` on `(ℂ^N)^{⊗k}`: the basis vector
//!   `ε_{k_1} ⊗ ⋯ ⊗ ε_{k_k}` is scaled by `q^{Σ_ℓ c_ℓ k_ℓ}`, where
//!   `c_ℓ = (λ, β_ℓ)` and `β_ℓ` runs over the positive roots attached to the
//!   reduced word. Only exponents are stored, so spectra and norms reduce to
//!   lattice-point counting.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::qcalc::{check_domain_f64, QDomain};
use crate::rootsys::{RootSystem, Weight, WeylWord};
use crate::{Error, Result};

/// Dense real `N × N` matrix acting on the truncated basis `ε_0..ε_{N−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Su2Operator {
    label: String,
    trunc: usize,
    matrix: Vec<f64>,
}

impl Su2Operator {
    pub fn zeros(label: &str, trunc: usize) -> Self {
        Su2Operator { label: label.to_string(), trunc, matrix: vec![0.0; trunc * trunc] }
    }

    pub fn identity(trunc: usize) -> Self {
        Self::diagonal("1", (0..trunc).map(|_| 1.0))
    }

    pub fn diagonal<I: IntoIterator<Item = f64>>(label: &str, diag: I) -> Self {
        let d: Vec<f64> = diag.into_iter().collect();
        let mut op = Self::zeros(label, d.len());
        for (k, v) in d.into_iter().enumerate() {
            op.set(k, k, v);
        }
        op
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Row-major entries.
    pub fn matrix(&self) -> &[f64] {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.matrix[row * self.trunc + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: f64) {
        self.matrix[row * self.trunc + col] = v;
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.trunc).map(|k| self.get(k, k)).collect()
    }

    /// Image of the basis vector `ε_j`.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.trunc).map(|i| self.get(i, j)).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.trunc;
        let mut out = Self::zeros(&adjoint_label(&self.label), n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn compose(&self, rhs: &Su2Operator) -> Self {
        assert_eq!(self.trunc, rhs.trunc, "truncation mismatch");
        let n = self.trunc;
        let mut label = self.label.clone();
        label.push(' ');
        label.push_str(&rhs.label);
        let mut out = Self::zeros(&label, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.matrix[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn scaled(&self, c: f64) -> Self {
        Su2Operator { label: self.label.clone(), trunc: self.trunc, matrix: self.matrix.iter().map(|v| v * c).collect() }
    }

    pub fn sub(&self, rhs: &Su2Operator) -> Self {
        Su2Operator {
            label: self.label.clone(),
            trunc: self.trunc,
            matrix: self.matrix.iter().zip(&rhs.matrix).map(|(a, b)| a - b).collect(),
        }
    }

    /// `sqrt(‖A‖₁ ‖A‖_∞)`, an upper bound for the operator norm.
    pub fn norm_bound(&self) -> f64 {
        let n = self.trunc;
        let col = (0..n).map(|j| (0..n).map(|i| self.get(i, j).abs()).sum::<f64>()).fold(0.0, f64::max);
        let row = (0..n).map(|i| (0..n).map(|j| self.get(i, j).abs()).sum::<f64>()).fold(0.0, f64::max);
        libm::sqrt(col * row)
    }

    /// Largest entry of `A ε_j` over `j < cols`.
    pub fn max_abs_on_columns(&self, cols: usize) -> f64 {
        (0..cols).flat_map(|j| self.column(j)).fold(0.0, |m, v| f64::max(m, v.abs()))
    }
}

fn adjoint_label(label: &str) -> String {
    if let Some(base) = label.strip_suffix('*') {
        base.to_string()
    } else if label.contains(' ') {
        let mut s = String::from("(");
        s.push_str(label);
        s.push_str(")*");
        s
    } else {
        let mut s = label.to_string();
        s.push('*');
        s
    }
}

/// Images of the generators `x, u, v, y` of `C(SU_q(2))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Su2Generators {
    pub x: Su2Operator,
    pub u: Su2Operator,
    pub v: Su2Operator,
    pub y: Su2Operator,
}

impl Su2Generators {
    pub fn all(&self) -> [&Su2Operator; 4] {
        [&self.x, &self.u, &self.v, &self.y]
    }
}

pub(crate) fn check_q_and_trunc(q: f64, trunc: usize, min: usize) -> Result<()> {
    check_domain_f64(q, QDomain::Standard)?;
    if trunc < min {
        return Err(Error::TruncationTooSmall { got: trunc, min });
    }
    Ok(())
}

/// `x ε_k = √(1−q^{2k+2}) ε_{k+1}`, `u ε_k = q^k ε_k`,
/// `v ε_k = −q^{k+1} ε_k`, `y ε_k = √(1−q^{2k}) ε_{k−1}`.
pub fn su2_generators(q: f64, trunc: usize) -> Result<Su2Generators> {
    check_q_and_trunc(q, trunc, 2)?;
    let qp = |e: usize| libm::pow(q, e as f64);
    let mut x = Su2Operator::zeros("x", trunc);
    let mut y = Su2Operator::zeros("y", trunc);
    for k in 0..trunc {
        if k + 1 < trunc {
            x.set(k + 1, k, libm::sqrt(1.0 - qp(2 * k + 2)));
        }
        if k >= 1 {
            y.set(k - 1, k, libm::sqrt(1.0 - qp(2 * k)));
        }
    }
    let u = Su2Operator::diagonal("u", (0..trunc).map(qp));
    let v = Su2Operator::diagonal("v", (0..trunc).map(|k| -qp(k + 1)));
    Ok(Su2Generators { x, u, v, y })
}

/// Exponent data of `π_w(|a_λ|)` for a reduced word `w = s_{i_1} ⋯ s_{i_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalModel {
    /// `e_ℓ = (s_{i_{ℓ+1}} ⋯ s_{i_k} λ)(h_{i_ℓ})`, the power of `π_{i_ℓ}(u_{i_ℓ})`.
    root_coords: Vec<u64>,
    /// `d_{i_ℓ}`, since `π_i(u_i)` scales by `q_i^k = q^{d_i k}`.
    scales: Vec<u64>,
    trunc: usize,
    q: f64,
}

impl DiagonalModel {
    pub fn from_parts(root_coords: Vec<u64>, scales: Vec<u64>, q: f64, trunc: usize) -> Result<Self> {
        if root_coords.len() != scales.len() {
            return Err(Error::LengthMismatch { expected: root_coords.len(), got: scales.len() });
        }
        check_q_and_trunc(q, trunc, 1)?;
        Ok(DiagonalModel { root_coords, scales, trunc, q })
    }

    pub fn root_coords(&self) -> &[u64] {
        &self.root_coords
    }

    pub fn scales(&self) -> &[u64] {
        &self.scales
    }

    /// Powers of `q` per tensor factor: `c_ℓ = d_{i_ℓ} e_ℓ = (λ, β_ℓ)`.
    pub fn exponents(&self) -> Vec<u64> {
        self.root_coords.iter().zip(&self.scales).map(|(e, d)| e * d).collect()
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn factors(&self) -> usize {
        self.root_coords.len()
    }

    pub fn is_regular(&self) -> bool {
        self.root_coords.iter().all(|&e| e > 0)
    }

    fn require_regular(&self) -> Result<()> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::NotRegular(alloc::format!("{:?}", self.root_coords)))
        }
    }

    /// Largest total exponent on the truncated grid.
    pub fn max_level(&self) -> u64 {
        self.exponents().iter().sum::<u64>() * (self.trunc as u64 - 1)
    }

    /// `counts[s] = #{(k_ℓ) ∈ [0,N)^k : Σ c_ℓ k_ℓ = s}` for `s ≤ max_s`.
    pub fn level_counts(&self, max_s: u64) -> Vec<u64> {
        let len = max_s as usize + 1;
        let mut counts = vec![0u64; len];
        counts[0] = 1;
        for c in self.exponents() {
            let c = c as usize;
            let mut next = vec![0u64; len];
            for (s, &n) in counts.iter().enumerate() {
                if n == 0 {
                    continue;
                }
                for k in 0..self.trunc {
                    let t = s + c * k;
                    if t >= len {
                        break;
                    }
                    next[t] += n;
                    if c == 0 {
                        // every k lands on the same level
                        next[t] += n * (self.trunc as u64 - 1);
                        break;
                    }
                }
            }
            counts = next;
        }
        counts
    }

    /// Eigenvalue of the basis vector indexed by `ks`.
    pub fn eigenvalue(&self, ks: &[usize]) -> f64 {
        let s: u64 = self.exponents().iter().zip(ks).map(|(c, &k)| c * k as u64).sum();
        libm::pow(self.q, s as f64)
    }

    /// Basis tuples spanning the eigenspace of eigenvalue 1.
    pub fn unit_eigenspace(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for c in self.exponents() {
            let range = if c == 0 { self.trunc } else { 1 };
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..range).map(move |k| {
                        let mut t = t.clone();
                        t.push(k);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

/// Builds the model of `π_w(|a_λ|)` on `(ℂ^N)^{⊗ℓ(w)}`.
pub fn diagonal_model(rs: &RootSystem, lambda: &Weight, w: &WeylWord, q: f64, trunc: usize) -> Result<DiagonalModel> {
    rs.require_dominant(lambda)?;
    rs.require_reduced(w)?;
    let letters = w.letters();
    let roots = rs.inversion_roots(w);
    let mut root_coords = Vec::with_capacity(letters.len());
    let mut scales = Vec::with_capacity(letters.len());
    for (beta, &i) in roots.iter().zip(letters) {
        let d = rs.symmetrizer(i);
        // 2(λ,β)/(α_i,α_i) = (λ,β)/d_i
        let pairing = rs.root_pairing(lambda, beta);
        debug_assert_eq!(pairing % d, 0);
        root_coords.push((pairing / d) as u64);
        scales.push(d as u64);
    }
    DiagonalModel::from_parts(root_coords, scales, q, trunc)
}

/// `‖|a_λ|^m − |a_λ|^n‖ = max_s |q^{ms} − q^{ns}|` over achievable levels `s`.
pub fn power_norm_gap(model: &DiagonalModel, m: u32, n: u32) -> Result<f64> {
    model.require_regular()?;
    if m > n {
        return Err(Error::InvalidAction(alloc::format!("power_norm_gap needs m <= n, got m={m}, n={n}")));
    }
    let counts = model.level_counts(model.max_level());
    let q = model.q;
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(s, _)| {
            let s = s as f64;
            (libm::pow(q, m as f64 * s) - libm::pow(q, n as f64 * s)).abs()
        })
        .fold(0.0, f64::max))
}

/// `‖|a_λ|^m − p₀‖`, where `p₀` projects onto `ε_0^{⊗k}`.
pub fn projection_gap(model: &DiagonalModel, m: u32) -> Result<f64> {
    model.require_regular()?;
    let counts = model.level_counts(model.max_level());
    Ok(counts
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(s, _)| libm::pow(model.q, (m as u64 * s as u64) as f64))
        .unwrap_or(0.0))
}

/// One eigenvalue `q^power` of a diagonal model.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLine {
    pub power: u64,
    pub value: f64,
    pub multiplicity: u64,
}

/// Eigenvalues `q^s ≥ cutoff` with multiplicities on the truncated grid.
pub fn spectrum(model: &DiagonalModel, cutoff: f64) -> Result<Vec<SpectralLine>> {
    model.require_regular()?;
    let q = model.q;
    let mut s_max = 0u64;
    let ceiling = model.max_level();
    while s_max < ceiling && libm::pow(q, (s_max + 1) as f64) >= cutoff * (1.0 - 1e-12) {
        s_max += 1;
    }
    let counts = model.level_counts(s_max);
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(s, &c)| SpectralLine { power: s as u64, value: libm::pow(q, s as f64), multiplicity: c })
        .collect())
}

/// One twisted commutation relation `C |a| = q^e |a| C`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutationLine {
    pub generator: String,
    pub exponent: i64,
    pub violation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutationReport {
    /// `max |(ux − q·xu) ε_j|` over interior `j`.
    pub ux_vs_qxu: f64,
    /// Relations against `|a_{ω_1}| = |π(u)|`.
    pub twisted: Vec<CommutationLine>,
    /// `|a_0| = 1` commutes with every generator.
    pub trivial_weight: f64,
    pub max_violation: f64,
}

/// Checks the `SU_q(2)` specialization of
/// `C^λ_{μ,ν} |a_Λ| = q^{(Λ, −μ + w₀ν)} |a_Λ| C^λ_{μ,ν}` with `Λ = ω_1`,
/// and `ux = q·xu`, on basis vectors `ε_j`, `j < N−1`.
pub fn commutation_check(q: f64, trunc: usize) -> Result<CommutationReport> {
    check_q_and_trunc(q, trunc, 4)?;
    let g = su2_generators(q, trunc)?;
    let interior = trunc - 1;
    let a1 = RootSystem::from_label("A1")?;
    let w0 = a1.longest_element().clone();
    let top = Weight::fundamental(1, 1);
    let bottom = -&top;
    let abs_a = Su2Operator::diagonal("|u|", g.u.diag().into_iter().map(f64::abs));

    let ux = g.u.compose(&g.x);
    let xu = g.x.compose(&g.u).scaled(q);
    let ux_vs_qxu = ux.sub(&xu).max_abs_on_columns(interior);

    // rows/columns of the fundamental corepresentation: index 1 ↔ ω_1, 2 ↔ s_1ω_1
    let cases = [(&g.x, &top, &top), (&g.u, &top, &bottom), (&g.v, &bottom, &top), (&g.y, &bottom, &bottom)];
    let mut twisted = Vec::new();
    for (op, mu, nu) in cases {
        let shifted = &a1.weyl_apply(&w0, nu)? - mu;
        let e = a1.inner_product(&top, &shifted);
        assert!(e.is_integer());
        let exponent = e.to_integer();
        let lhs = op.compose(&abs_a);
        let rhs = abs_a.compose(op).scaled(libm::pow(q, exponent as f64));
        twisted.push(CommutationLine {
            generator: op.label().to_string(),
            exponent,
            violation: lhs.sub(&rhs).max_abs_on_columns(interior),
        });
    }
    let id = Su2Operator::identity(trunc);
    let trivial_weight = g
        .all()
        .iter()
        .map(|op| op.compose(&id).sub(&id.compose(op)).max_abs_on_columns(interior))
        .fold(0.0, f64::max);
    let max_violation = twisted.iter().map(|l| l.violation).fold(ux_vs_qxu.max(trivial_weight), f64::max);
    Ok(CommutationReport { ux_vs_qxu, twisted, trivial_weight, max_violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_entries() {
        let q = 0.5;
        let g = su2_generators(q, 8).unwrap();
        assert_eq!(g.u.diag()[..3], [1.0, 0.5, 0.25]);
        assert_eq!(g.v.diag()[..3], [-0.5, -0.25, -0.125]);
        assert!((g.x.get(1, 0) - (1.0f64 - 0.25).sqrt()).abs() < 1e-15);
        assert_eq!(g.y.get(0, 0), 0.0);
        for op in g.all() {
            assert!(op.norm_bound() <= 1.0 + 1e-12);
        }
        assert!(su2_generators(1.0, 8).is_err());
        assert!(su2_generators(0.5, 1).is_err());
    }

    #[test]
    fn shift_identities() {
        let q: f64 = 0.3;
        let g = su2_generators(q, 16).unwrap();
        let xxs = g.x.compose(&g.x.adjoint());
        let xsx = g.x.adjoint().compose(&g.x);
        for k in 0..15 {
            assert!((xxs.get(k, k) - (1.0 - q.powi(2 * k as i32))).abs() < 1e-14);
            assert!((xsx.get(k, k) - (1.0 - q.powi(2 * k as i32 + 2))).abs() < 1e-14);
        }
    }

    #[test]
    fn a2_rho_model() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let rho = a2.weyl_vector();
        let m = diagonal_model(&a2, &rho, &WeylWord::new(vec![1, 2, 1]), 0.5, 8).unwrap();
        assert_eq!(m.root_coords(), &[1, 2, 1]);
        assert_eq!(m.exponents(), vec![1, 2, 1]);
        let z = diagonal_model(&a2, &Weight::zero(2), a2.longest_element(), 0.5, 8).unwrap();
        assert!(z.exponents().iter().all(|&e| e == 0));
        assert!(diagonal_model(&a2, &rho, &WeylWord::new(vec![1, 1]), 0.5, 8).is_err());
        assert!(power_norm_gap(&z, 1, 2).is_err());
    }

    #[test]
    fn sl2_gap_and_spectrum() {
        let a1 = RootSystem::from_label("A1").unwrap();
        let m = diagonal_model(&a1, &Weight::fundamental(1, 1), a1.longest_element(), 0.5, 32).unwrap();
        assert_eq!(m.exponents(), vec![1]);
        assert!((power_norm_gap(&m, 1, 2).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(power_norm_gap(&m, 3, 3).unwrap(), 0.0);
        assert!((projection_gap(&m, 2).unwrap() - 0.25).abs() < 1e-15);
        let spec = spectrum(&m, 0.5f64.powi(5)).unwrap();
        assert_eq!(spec.len(), 6);
        assert!(spec.iter().all(|l| l.multiplicity == 1));
        assert_eq!(m.unit_eigenspace(), vec![vec![0]]);
    }

    #[test]
    fn a2_level_two_multiplicity() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let m = diagonal_model(&a2, &a2.weyl_vector(), a2.longest_element(), 0.5, 32).unwrap();
        let spec = spectrum(&m, 0.25).unwrap();
        let line = spec.iter().find(|l| l.power == 2).unwrap();
        assert_eq!(line.multiplicity, 4);
        assert_eq!(spec[0].multiplicity, 1);
    }

    #[test]
    fn commutation() {
        let r = commutation_check(0.5, 32).unwrap();
        assert!(r.max_violation < 1e-12, "{r:?}");
        let exps: Vec<i64> = r.twisted.iter().map(|l| l.exponent).collect();
        assert_eq!(exps, vec![-1, 0, 0, 1]);
        assert!(commutation_check(0.5, 3).is_err());
    }
}
