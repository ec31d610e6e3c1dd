use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// `Σ_p r_p log p` with rational `r_p`: an exact real logarithm of a positive
/// rational raised to a rational power. Logarithms of distinct primes are
/// linearly independent over ℚ, so equality here is equality of reals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactLog {
    prime_exponents: BTreeMap<u64, Rational>,
}

/// Prime factorization by trial division.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl ExactLog {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `log(base^exponent)`.
    pub fn new(base: Rational, exponent: Rational) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::NonPositiveBase(base.to_string()));
        }
        let mut out = ExactLog::zero();
        for (p, e) in factorize(*base.numer() as u64) {
            out.add_prime(p, exponent * e);
        }
        for (p, e) in factorize(*base.denom() as u64) {
            out.add_prime(p, -exponent * e);
        }
        Ok(out)
    }

    pub fn of(base: Rational) -> Result<Self> {
        Self::new(base, Rational::one())
    }

    pub fn from_prime_exponents<I: IntoIterator<Item = (u64, Rational)>>(it: I) -> Self {
        let mut out = ExactLog::zero();
        for (p, r) in it {
            out.add_prime(p, r);
        }
        out
    }

    fn add_prime(&mut self, p: u64, r: Rational) {
        if r.is_zero() {
            return;
        }
        let slot = self.prime_exponents.entry(p).or_insert_with(Rational::zero);
        *slot += r;
        if slot.is_zero() {
            self.prime_exponents.remove(&p);
        }
    }

    pub fn prime_exponents(&self) -> &BTreeMap<u64, Rational> {
        &self.prime_exponents
    }

    pub fn coeff(&self, p: u64) -> Rational {
        self.prime_exponents.get(&p).copied().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.prime_exponents.is_empty()
    }

    pub fn add(&self, rhs: &ExactLog) -> Self {
        let mut out = self.clone();
        for (&p, &r) in &rhs.prime_exponents {
            out.add_prime(p, r);
        }
        out
    }

    pub fn sub(&self, rhs: &ExactLog) -> Self {
        self.add(&rhs.scale(-Rational::one()))
    }

    pub fn scale(&self, k: Rational) -> Self {
        Self::from_prime_exponents(self.prime_exponents.iter().map(|(&p, &r)| (p, r * k)))
    }

    /// Floating-point value, for display and numerical corroboration only.
    pub fn to_f64(&self) -> f64 {
        self.prime_exponents
            .iter()
            .map(|(&p, r)| (*r.numer() as f64 / *r.denom() as f64) * libm::log(p as f64))
            .fold(0.0, |a, b| a + b)
    }

    /// Exact sign of the real number.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let den = self.prime_exponents.values().fold(1i64, |l, r| l.lcm(r.denom()));
        let mut pos = BigUint::one();
        let mut neg = BigUint::one();
        for (&p, r) in &self.prime_exponents {
            let e = (r * den).to_integer();
            let pw = num_traits::pow(BigUint::from(p), e.unsigned_abs() as usize);
            if e > 0 {
                pos *= pw;
            } else {
                neg *= pw;
            }
        }
        match pos.cmp(&neg) {
            core::cmp::Ordering::Greater => 1,
            core::cmp::Ordering::Less => -1,
            core::cmp::Ordering::Equal => 0,
        }
    }
}

impl fmt::Display for ExactLog {
    /// Written as `log(2^a 3^b …)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str("log(")?;
        for (k, (p, r)) in self.prime_exponents.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if r.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{r}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn construction() {
        assert!(ExactLog::new(r(1, 1), r(1, 1)).unwrap().is_zero());
        let l = ExactLog::new(r(4, 1), r(1, 2)).unwrap();
        assert_eq!(l, ExactLog::from_prime_exponents([(2, r(1, 1))]));
        let s = ExactLog::of(r(6, 1)).unwrap();
        assert_eq!(s.coeff(2), r(1, 1));
        assert_eq!(s.coeff(3), r(1, 1));
        assert!(ExactLog::of(r(0, 1)).is_err());
        assert!(ExactLog::of(r(-2, 1)).is_err());
    }

    #[test]
    fn additivity_and_sign() {
        let a = ExactLog::of(r(2, 3)).unwrap();
        let b = ExactLog::of(r(9, 5)).unwrap();
        assert_eq!(a.add(&b), ExactLog::of(r(6, 5)).unwrap());
        assert_eq!(a.signum(), -1);
        assert_eq!(b.signum(), 1);
        assert_eq!(a.sub(&a).signum(), 0);
        // 2^19 / 3^12 = 524288 / 531441 < 1
        let close = ExactLog::from_prime_exponents([(2, r(19, 1)), (3, r(-12, 1))]);
        assert_eq!(close.signum(), -1);
        assert!((ExactLog::of(r(1, 4)).unwrap().to_f64() + 4f64.ln()).abs() < 1e-15);
        assert_eq!(ExactLog::new(r(1, 4), r(1, 2)).unwrap().to_string(), "log(2^-1)");
    }
}
