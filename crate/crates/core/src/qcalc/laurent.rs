use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// Integer Laurent polynomial in `q`. Zero coefficients are never stored, so
/// equal polynomials have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

/// Whether evaluation points outside `(0,1)` are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QDomain {
    /// Only `0 < q < 1`.
    #[default]
    Standard,
    /// Any nonzero `q`.
    Unrestricted,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·q^e`.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(coeff).expect("Laurent coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.terms.values().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Substitutes `q ↦ q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Invariant under `q ↦ q^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> i64 {
        self.terms.values().fold(0, |g, &c| num_integer::gcd(g, c))
    }

    /// Exact division. Fails if the divisor is zero or a remainder is left.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dmin, dmax) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::DivisionByZero),
        };
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        // Long division from the top degree; the remainder's span shrinks each step.
        while let Some(rmax) = rem.max_exp() {
            let rmin = rem.min_exp().unwrap_or(rmax);
            if rmax - rmin < dmax - dmin {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(rmax);
            if c % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let qc = c / lead;
            let qe = rmax - dmax;
            quot.add_term(qe, qc);
            for (e, dc) in divisor.terms() {
                let prod = dc.checked_mul(qc).ok_or(Error::Overflow("Laurent division"))?;
                rem.add_term(e + qe, -prod);
            }
        }
        Ok(quot)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, q: &Rational, domain: QDomain) -> Result<BigRational> {
        let big = BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
        self.eval_big(&big, domain)
    }

    pub fn eval_big(&self, q: &BigRational, domain: QDomain) -> Result<BigRational> {
        check_domain_big(q, domain)?;
        if q.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::QOutOfRange("0".to_string()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let pw = if e >= 0 {
                num_traits::pow(q.clone(), e as usize)
            } else {
                num_traits::pow(q.recip(), (-e) as usize)
            };
            acc += pw * BigRational::from_integer(BigInt::from(c));
        }
        Ok(acc)
    }

    /// Floating-point value.
    pub fn eval_f64(&self, q: f64, domain: QDomain) -> Result<f64> {
        check_domain_f64(q, domain)?;
        Ok(self.terms().map(|(e, c)| c as f64 * libm::pow(q, e as f64)).sum())
    }
}

pub(crate) fn check_domain_f64(q: f64, domain: QDomain) -> Result<()> {
    let ok = match domain {
        QDomain::Standard => q > 0.0 && q < 1.0,
        QDomain::Unrestricted => q.is_finite() && q != 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::QOutOfRange(alloc::format!("{q}")))
    }
}

fn check_domain_big(q: &BigRational, domain: QDomain) -> Result<()> {
    let ok = match domain {
        QDomain::Standard => q.is_positive() && *q < BigRational::one(),
        QDomain::Unrestricted => !q.is_zero(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::QOutOfRange(q.to_string()))
    }
}

pub(crate) fn check_domain_rational(q: &Rational, domain: QDomain) -> Result<()> {
    let ok = match domain {
        QDomain::Standard => q.is_positive() && *q < Rational::one(),
        QDomain::Unrestricted => !q.is_zero(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::QOutOfRange(q.to_string()))
    }
}

/// Lossy conversion used for diagnostics.
pub fn big_to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => write_power(f, e)?,
                (_, m) => {
                    write!(f, "{m}")?;
                    write_power(f, e)?
                }
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("Laurent coefficient overflow"));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Ascending dense coefficient vector of `p·q^{-min_exp}`, with that shift.
pub(crate) fn to_dense(p: &LaurentPoly) -> (i64, Vec<i64>) {
    match (p.min_exp(), p.max_exp()) {
        (Some(lo), Some(hi)) => {
            let mut v = alloc::vec![0; (hi - lo + 1) as usize];
            for (e, c) in p.terms() {
                v[(e - lo) as usize] = c;
            }
            (lo, v)
        }
        _ => (0, Vec::new()),
    }
}
