use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::{to_dense, LaurentPoly, QDomain};
use crate::{Error, Rational, Result};

/// Quotient of two Laurent polynomials in lowest terms.
///
/// Canonical form: numerator and denominator share no non-unit factor in
/// `ℤ[q, q^{-1}]`, the denominator is an ordinary polynomial with nonzero
/// constant term and positive leading coefficient. Structural equality is
/// therefore equality of rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        reduce(p, LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn mul(&self, other: &RationalFunction) -> Self {
        reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn eval_rational(&self, q: &Rational, domain: QDomain) -> Result<BigRational> {
        let d = self.den.eval_rational(q, domain)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_rational(q, domain)? / d)
    }

    pub fn eval_f64(&self, q: f64, domain: QDomain) -> Result<f64> {
        Ok(self.num.eval_f64(q, domain)? / self.den.eval_f64(q, domain)?)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn reduce(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
    if num.is_zero() {
        return RationalFunction { num, den: LaurentPoly::one() };
    }
    let g = poly_gcd(&num, &den);
    let mut num = num.div_exact(&g).expect("gcd divides numerator");
    let mut den = den.div_exact(&g).expect("gcd divides denominator");
    let c = num_integer::gcd(num.content(), den.content());
    if c > 1 {
        num = num.div_exact(&LaurentPoly::monomial(0, c)).expect("content divides");
        den = den.div_exact(&LaurentPoly::monomial(0, c)).expect("content divides");
    }
    let shift = -den.min_exp().unwrap_or(0);
    num = num.shift(shift);
    den = den.shift(shift);
    if den.leading_coeff().unwrap_or(1) < 0 {
        num = -&num;
        den = -&den;
    }
    RationalFunction { num, den }
}

/// Primitive gcd in `ℤ[q]` of the polynomial parts, as a Laurent polynomial
/// with nonzero constant term (primitive pseudo-remainder sequence).
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, da) = to_dense(a);
    let (_, db) = to_dense(b);
    let mut x = primitive(da.iter().map(|&c| BigInt::from(c)).collect());
    let mut y = primitive(db.iter().map(|&c| BigInt::from(c)).collect());
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    LaurentPoly::from_terms(
        x.iter().enumerate().map(|(k, c)| (k as i64, c.to_i64().expect("gcd coefficient fits in i64"))),
    )
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let content = v.iter().fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
    if !content.is_zero() && !content.is_one() {
        v.iter_mut().for_each(|c| *c /= &content);
    }
    v
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let top = r.last().unwrap().clone();
        let off = r.len() - b.len();
        r.iter_mut().for_each(|c| *c *= &lead);
        for (k, c) in b.iter().enumerate() {
            r[off + k] -= &top * c;
        }
        trim(&mut r);
    }
    r
}
