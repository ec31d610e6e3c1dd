//! Finite-type root data, the invariant form and Weyl group combinatorics.
//!
//! Weights are always stored in fundamental-weight coordinates; the simple
//! root `α_j` has coordinates equal to column `j` of the Cartan matrix. The
//! invariant form is normalized so that the shortest simple roots satisfy
//! `(α_i,α_i) = 2`, hence `(α_i,α_j) = d_i a_ij` with `min d_i = 1`.

mod tables;
mod weight;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

pub use weight::{Weight, WeylWord};

use crate::linalg::{self, Matrix};
use crate::{Error, Rational, Result};

/// Cartan–Killing series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_char(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            other => return Err(Error::UnknownSeries(other)),
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// An irreducible finite type, e.g. `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidRank { series: series.as_char(), rank })
        }
    }

    /// Parses labels such as `"A2"`, `"g2"` or `"E8"`.
    pub fn parse(label: &str) -> Result<Self> {
        let mut chars = label.trim().chars();
        let c = chars.next().ok_or_else(|| Error::Parse(label.to_string()))?;
        let rank = chars.as_str().parse().map_err(|_| Error::Parse(label.to_string()))?;
        LieType::new(Series::from_char(c)?, rank)
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.as_char(), self.rank)
    }
}

/// Dominance data of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightClass {
    pub dominant: bool,
    pub regular: bool,
}

/// Cartan datum with the normalized invariant form and cached `w₀`, `Δ₊`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    inverse_cartan: Matrix,
    gram: Matrix,
    w0: WeylWord,
    positive_roots: Vec<Weight>,
}

/// Same as [`RootSystem::new`].
pub fn build_root_system(lie_type: LieType) -> Result<RootSystem> {
    RootSystem::new(lie_type)
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Result<Self> {
        // re-validate in case the caller built the type by hand
        let lie_type = LieType::new(lie_type.series, lie_type.rank)?;
        let (d, b) = tables::root_form(lie_type);
        let n = d.len();
        let cartan: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| b[i][j] / d[i]).collect()).collect();
        let a: Matrix = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
            .collect();
        let inverse_cartan = linalg::inverse(&a).expect("finite-type Cartan matrices are invertible");
        // (ω_i, ω_j) = d_i (A^{-1})_ij, from (ω_i, α_j) = d_j δ_ij.
        let gram: Matrix = (0..n)
            .map(|i| (0..n).map(|j| inverse_cartan[i][j] * d[i]).collect())
            .collect();
        let mut rs = RootSystem {
            lie_type,
            cartan,
            symmetrizers: d,
            inverse_cartan,
            gram,
            w0: WeylWord::identity(),
            positive_roots: Vec::new(),
        };
        rs.w0 = rs.greedy_longest_word();
        rs.positive_roots = rs.inversion_roots(&rs.w0);
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        RootSystem::new(LieType::parse(label)?)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `a_ij = α_j(h_i)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// `d_i` for a 1-based index.
    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.symmetrizers[i - 1]
    }

    /// Gram matrix `(ω_i, ω_j)` of the fundamental weights.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Leading principal minors of the Gram matrix; all positive.
    pub fn gram_minors(&self) -> Vec<Rational> {
        linalg::leading_minors(&self.gram)
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: w.rank() })
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// The invariant form `(λ, μ)`. Panics on rank mismatch.
    pub fn inner_product(&self, l: &Weight, m: &Weight) -> Rational {
        assert_eq!(l.rank(), self.rank(), "weight rank mismatch");
        assert_eq!(m.rank(), self.rank(), "weight rank mismatch");
        let mut acc = Rational::zero();
        for (i, &a) in l.coords().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in m.coords().iter().enumerate() {
                if b != 0 {
                    acc += self.gram[i][j] * (a * b);
                }
            }
        }
        acc
    }

    /// `2(λ, μ)` as an integer. Exact for every pair this crate forms
    /// (weights against roots, or ρ-shifted sums thereof); panics otherwise.
    pub fn doubled_pairing(&self, l: &Weight, m: &Weight) -> i64 {
        let v = self.inner_product(l, m) * 2;
        assert!(v.is_integer(), "2({l},{m}) = {v} is not integral");
        v.to_integer()
    }

    /// `(λ, α)` for a root `α`; always an integer.
    pub fn root_pairing(&self, l: &Weight, root: &Weight) -> i64 {
        let v = self.inner_product(l, root);
        assert!(v.is_integer(), "({l},{root}) = {v} is not integral");
        v.to_integer()
    }

    /// `α_i` (1-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row[i - 1]).collect())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (1..=self.rank()).map(|i| self.simple_root(i)).collect()
    }

    fn reflect(&self, i: usize, w: &mut [i64]) {
        let c = w[i - 1];
        if c != 0 {
            for (k, row) in self.cartan.iter().enumerate() {
                w[k] -= c * row[i - 1];
            }
        }
    }

    /// `s_i(λ) = λ − λ(h_i) α_i`.
    pub fn simple_reflection(&self, i: usize, l: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check(l)?;
        let mut c = l.coords().to_vec();
        self.reflect(i, &mut c);
        Ok(Weight::new(c))
    }

    /// Applies `w = s_{i_1} ⋯ s_{i_k}` to `λ` (rightmost letter first).
    pub fn weyl_apply(&self, w: &WeylWord, l: &Weight) -> Result<Weight> {
        self.check(l)?;
        for &i in w.letters() {
            self.check_index(i)?;
        }
        let mut c = l.coords().to_vec();
        for &i in w.letters().iter().rev() {
            self.reflect(i, &mut c);
        }
        Ok(Weight::new(c))
    }

    pub fn weyl_vector(&self) -> Weight {
        Weight::new(alloc::vec![1; self.rank()])
    }

    pub fn classify_weight(&self, l: &Weight) -> WeightClass {
        WeightClass {
            dominant: l.coords().iter().all(|&c| c >= 0),
            regular: l.coords().iter().all(|&c| c > 0),
        }
    }

    pub fn is_dominant(&self, l: &Weight) -> bool {
        self.classify_weight(l).dominant
    }

    pub(crate) fn require_dominant(&self, l: &Weight) -> Result<()> {
        self.check(l)?;
        if self.is_dominant(l) {
            Ok(())
        } else {
            Err(Error::NotDominant(l.to_string()))
        }
    }

    /// Coordinates of `λ` in the simple-root basis.
    pub fn root_coordinates(&self, l: &Weight) -> Vec<Rational> {
        let c: Vec<Rational> = l.coords().iter().map(|&x| Rational::from_integer(x)).collect();
        linalg::mat_vec(&self.inverse_cartan, &c)
    }

    /// `λ ∈ Q₊`: a non-negative integer combination of simple roots.
    pub fn in_positive_cone(&self, l: &Weight) -> bool {
        self.root_coordinates(l).iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// `μ ≤ λ` in the dominance order.
    pub fn precedes(&self, m: &Weight, l: &Weight) -> bool {
        self.in_positive_cone(&(l - m))
    }

    /// Height `Σ c_i` of a weight with root coordinates `c`.
    pub fn height(&self, l: &Weight) -> Rational {
        self.root_coordinates(l).into_iter().sum()
    }

    /// Reduced word for `w₀`: starting from ρ, apply any `s_i` whose
    /// coordinate is positive until `−ρ` is reached; the recorded letters,
    /// reversed, form the word.
    fn greedy_longest_word(&self) -> WeylWord {
        let mut c = alloc::vec![1i64; self.rank()];
        let mut letters = Vec::new();
        while let Some(i) = c.iter().position(|&x| x > 0) {
            self.reflect(i + 1, &mut c);
            letters.push(i + 1);
        }
        letters.reverse();
        WeylWord::new(letters)
    }

    /// The cached reduced word for the longest element.
    pub fn longest_element(&self) -> &WeylWord {
        &self.w0
    }

    /// Positive roots `β_ℓ = s_{i_k} ⋯ s_{i_{ℓ+1}} α_{i_ℓ}` attached to the
    /// reduced word `w₀ = s_{i_1} ⋯ s_{i_k}`, in the order `ℓ = 1..k`.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// The roots `s_{i_k} ⋯ s_{i_{ℓ+1}} α_{i_ℓ}` of an arbitrary word.
    /// The word is reduced exactly when all of them are positive.
    pub fn inversion_roots(&self, w: &WeylWord) -> Vec<Weight> {
        let letters = w.letters();
        (0..letters.len())
            .map(|l| {
                let mut c = self.simple_root(letters[l]).into_coords();
                for &i in &letters[l + 1..] {
                    self.reflect(i, &mut c);
                }
                Weight::new(c)
            })
            .collect()
    }

    pub fn is_reduced(&self, w: &WeylWord) -> Result<bool> {
        for &i in w.letters() {
            self.check_index(i)?;
        }
        Ok(self.inversion_roots(w).iter().all(|b| self.in_positive_cone(b)))
    }

    pub(crate) fn require_reduced(&self, w: &WeylWord) -> Result<()> {
        if self.is_reduced(w)? {
            Ok(())
        } else {
            Err(Error::NotReduced(w.to_string()))
        }
    }

    /// Weyl orbit of `λ` by breadth-first search over simple reflections.
    pub fn orbit(&self, l: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert(l.clone());
        queue.push_back(l.clone());
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rank() {
                let mut c = x.coords().to_vec();
                self.reflect(i, &mut c);
                let y = Weight::new(c);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        out
    }

    /// Dominant element of the orbit of `λ`.
    pub fn dominant_representative(&self, l: &Weight) -> Weight {
        let mut c = l.coords().to_vec();
        while let Some(i) = c.iter().position(|&x| x < 0) {
            self.reflect(i + 1, &mut c);
        }
        Weight::new(c)
    }

    /// Every Weyl group element `w`, paired with `ℓ(w)`, applied to a regular
    /// weight `base` and to an arbitrary `other`: yields `(wbase, wother, ℓ(w))`.
    /// The orbit of a regular weight is free, so it indexes `W`.
    pub(crate) fn weyl_sweep(&self, base: &Weight, other: &Weight) -> Vec<(Weight, Weight, usize)> {
        debug_assert!(self.classify_weight(base).regular);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert(base.clone());
        queue.push_back((base.clone(), other.clone(), 0usize));
        while let Some((b, o, len)) = queue.pop_front() {
            for i in 1..=self.rank() {
                let mut cb = b.coords().to_vec();
                self.reflect(i, &mut cb);
                let nb = Weight::new(cb);
                if seen.insert(nb.clone()) {
                    let mut co = o.coords().to_vec();
                    self.reflect(i, &mut co);
                    queue.push_back((nb, Weight::new(co), len + 1));
                }
            }
            out.push((b, o, len));
        }
        out
    }
}
