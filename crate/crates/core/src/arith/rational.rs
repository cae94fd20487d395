use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Div, Mul, Neg};
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Natural(self.0.gcd(&other.0))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Natural(self.0.lcm(&other.0))
    }

    /// `true` when `d` divides `self`. Zero divides only zero.
    pub fn is_multiple_of(&self, d: &Self) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        (&self.0 % &d.0).is_zero()
    }

    /// Exact quotient; panics in debug builds when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.0.div_rem(&d.0);
        debug_assert!(r.is_zero());
        Natural(q)
    }

    pub fn pow(&self, e: u32) -> Self {
        Natural(Pow::pow(&self.0, e))
    }

    /// Exact integer `k`-th root if `self` is a perfect `k`-th power.
    pub fn exact_root(&self, k: u32) -> Option<Self> {
        if k == 1 {
            return Some(self.clone());
        }
        let r = self.0.nth_root(k);
        (Pow::pow(&r, k) == self.0).then_some(Natural(r))
    }

    /// Natural logarithm; `ln 0` is `-inf`.
    pub fn ln(&self) -> f64 {
        let bits = self.0.bits();
        if bits <= 1000 {
            return libm::log(self.0.to_f64().unwrap_or(f64::INFINITY));
        }
        let shift = bits - 64;
        let top = (&self.0 >> shift).to_f64().unwrap_or(f64::INFINITY);
        libm::log(top) + shift as f64 * core::f64::consts::LN_2
    }
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u128> for Natural {
    fn from(v: u128) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl Mul for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(Natural)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Nonzero rational in lowest terms: sign, numerator and denominator.
///
/// Reduction happens at construction, so equal values have equal
/// representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    negative: bool,
    num: Natural,
    den: Natural,
}

impl Rational {
    pub fn new(negative: bool, num: Natural, den: Natural) -> Result<Self> {
        if num.is_zero() {
            return Err(Error::Zero);
        }
        if den.is_zero() {
            return Err(Error::Domain("zero denominator"));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            negative,
            num: num.div_exact(&g),
            den: den.div_exact(&g),
        })
    }

    /// `n / d` from machine integers.
    pub fn from_ratio(n: i128, d: u128) -> Result<Self> {
        Self::new(n < 0, Natural::from(n.unsigned_abs()), Natural::from(d))
    }

    pub fn from_integer(n: i128) -> Result<Self> {
        Self::from_ratio(n, 1)
    }

    pub fn one() -> Self {
        Rational {
            negative: false,
            num: Natural::one(),
            den: Natural::one(),
        }
    }

    pub fn numer(&self) -> &Natural {
        &self.num
    }

    pub fn denom(&self) -> &Natural {
        &self.den
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// `true` for ±1.
    pub fn is_unit(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Rational {
            negative: false,
            ..self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        Rational {
            negative: self.negative,
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational {
            negative: self.negative && e % 2 == 1,
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Rational `k`-th root when `|self|` is a perfect `k`-th power of a rational.
    pub fn exact_root(&self, k: u32) -> Option<Self> {
        Some(Rational {
            negative: self.negative,
            num: self.num.exact_root(k)?,
            den: self.den.exact_root(k)?,
        })
    }

    pub fn to_f64(&self) -> f64 {
        let mag = libm::exp(self.num.ln() - self.den.ln());
        if self.negative {
            -mag
        } else {
            mag
        }
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        // Cross-reduce before multiplying to keep operands small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rational {
            negative: self.negative != rhs.negative,
            num: &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2),
            den: &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1),
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(mut self) -> Rational {
        self.negative = !self.negative;
        self
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (neg, _) => {
                let lhs = &self.num * &other.den;
                let rhs = &other.num * &self.den;
                let mag = lhs.cmp(&rhs);
                if neg {
                    mag.reverse()
                } else {
                    mag
                }
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.num)?;
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `[-]num/den` or `[-]num`, nothing else.
    fn from_str(s: &str) -> Result<Self> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let bad = || Error::Parse(s.to_string());
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n.parse::<Natural>().map_err(|_| bad())?, d.parse::<Natural>().map_err(|_| bad())?),
            None => (body.parse::<Natural>().map_err(|_| bad())?, Natural::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Rational::new(negative, num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_reduces() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-14/7").to_string(), "-2");
        assert_eq!(q("7").to_string(), "7");
        assert!(q("-7/6").is_negative());
    }

    #[test]
    fn rejects_other_formats() {
        for bad in ["", "+3", "3/", "/3", "1.5", " 3", "3/0", "--1", "1/-2", "a"] {
            assert!(matches!(bad.parse::<Rational>(), Err(Error::Parse(_))), "{bad:?}");
        }
        assert_eq!("0".parse::<Rational>(), Err(Error::Zero));
        assert_eq!("-0/5".parse::<Rational>(), Err(Error::Zero));
    }

    #[test]
    fn arithmetic_and_order() {
        assert_eq!(&q("2/3") * &q("9/4"), q("3/2"));
        assert_eq!(&q("2/3") / &q("-4"), q("-1/6"));
        assert_eq!(q("-2/3").pow(3), q("-8/27"));
        assert!(q("2/3") < q("3/4"));
        assert!(q("-3/4") < q("-2/3"));
        assert!(q("-5") < q("1/7"));
        assert_eq!(q("8/27").exact_root(3), Some(q("2/3")));
        assert_eq!(q("8/9").exact_root(2), None);
    }

    #[test]
    fn natural_ln_matches_f64_and_scales() {
        let n = Natural::from(1_000_000u64);
        assert!((n.ln() - libm::log(1e6)).abs() < 1e-12);
        let big = Natural::from(2u32).pow(3000);
        assert!((big.ln() - 3000.0 * core::f64::consts::LN_2).abs() < 1e-9);
    }
}
