use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::LogValue;
use crate::arith::{factorize, Natural};
use crate::{Error, Rational, Result};

/// The real positive root `base^(1/k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    base: Rational,
    k: u32,
}

/// Minimal polynomial `lead·x^degree − constant` of a surd over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub lead: Natural,
    pub constant: Natural,
    pub degree: u32,
}

fn divisors_desc(k: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d != k / d {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.reverse();
    large.extend(small);
    large.sort_unstable_by(|a, b| b.cmp(a));
    large
}

impl Surd {
    pub fn new(base: Rational, k: u32) -> Result<Self> {
        if base.is_negative() {
            return Err(Error::Domain("surd base must be positive"));
        }
        if k == 0 {
            return Err(Error::Domain("surd index must be positive"));
        }
        Ok(Surd { base, k })
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn index(&self) -> u32 {
        self.k
    }

    /// Writes `base = r^g` with the largest `g | k`, returning `(r, k/g)`.
    ///
    /// `x^(k/g) − r` is then irreducible: if `r` were a `p`-th power for a prime
    /// `p | k/g`, `base` would be a `(pg)`-th power with `pg | k`, contradicting
    /// the choice of `g`. For positive `r` that is the whole of Capelli's
    /// criterion. For squarefree integer bases `g = 1`, which matches the
    /// classical `p | D` Eisenstein argument.
    pub fn reduced(&self) -> (Rational, u32) {
        for g in divisors_desc(self.k) {
            if let Some(r) = self.base.exact_root(g) {
                return (r, self.k / g);
            }
        }
        unreachable!("g = 1 always succeeds")
    }

    pub fn degree(&self) -> u32 {
        self.reduced().1
    }

    pub fn minimal_polynomial(&self) -> BinomialPolynomial {
        let (r, degree) = self.reduced();
        BinomialPolynomial {
            lead: r.denom().clone(),
            constant: r.numer().clone(),
            degree,
        }
    }

    /// Mahler measure read off the minimal polynomial `n·x^d − m`: leading
    /// coefficient `n`, and `d` roots all of modulus `(m/n)^(1/d)`.
    pub fn mahler(&self) -> LogValue {
        let poly = self.minimal_polynomial();
        let d = poly.degree as f64;
        let ln_lead = poly.lead.ln();
        let ln_modulus = (poly.constant.ln() - ln_lead) / d;
        LogValue::new(ln_lead + d * ln_modulus.max(0.0))
    }

    /// Field norm from `ℚ(γ)` to ℚ: the product of the `d` conjugates,
    /// `(−1)^(d+1)·m/n`.
    pub fn norm(&self) -> Rational {
        let (r, d) = self.reduced();
        if d % 2 == 0 {
            -r
        } else {
            r
        }
    }

    /// Measure of `D^(1/k)` for a squarefree integer `D >= 2`: the minimal
    /// polynomial is `x^k − D`, every root has modulus `D^(1/k)`.
    pub fn mahler_squarefree(&self) -> Result<LogValue> {
        if !self.base.is_integer() || self.base.numer().is_one() {
            return Err(Error::NotSquarefree);
        }
        if !factorize(self.base.numer())?.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let k = self.k as f64;
        Ok(LogValue::new(k * (self.base.numer().ln() / k)))
    }

    pub fn approx(&self) -> f64 {
        libm::pow(self.base.to_f64(), 1.0 / self.k as f64)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_integer() {
            write!(f, "{}^(1/{})", self.base, self.k)
        } else {
            write!(f, "({})^(1/{})", self.base, self.k)
        }
    }
}

impl FromStr for Surd {
    type Err = Error;

    /// `D^(1/k)` or `(m/n)^(1/k)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (base, exp) = s.rsplit_once('^').ok_or_else(bad)?;
        let k = exp
            .strip_prefix("(1/")
            .and_then(|e| e.strip_suffix(')'))
            .ok_or_else(bad)?
            .parse::<u32>()
            .map_err(|_| bad())?;
        let base = match base.strip_prefix('(') {
            Some(inner) => inner.strip_suffix(')').ok_or_else(bad)?,
            None if base.contains('/') => return Err(bad()),
            None => base,
        };
        let base = base.parse::<Rational>().map_err(|e| match e {
            Error::Parse(_) => bad(),
            other => other,
        })?;
        Surd::new(base, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(s: &str) -> Surd {
        s.parse().unwrap()
    }

    #[test]
    fn degree_rule() {
        assert_eq!(surd("2^(1/2)").degree(), 2);
        assert_eq!(surd("30^(1/6)").degree(), 6);
        assert_eq!(surd("4^(1/2)").degree(), 1);
        assert_eq!(surd("8^(1/6)").degree(), 2);
        assert_eq!(surd("(4/9)^(1/4)").degree(), 2);
        assert_eq!(surd("(7/3)^(1/2)").degree(), 2);
        assert_eq!(surd("1^(1/5)").degree(), 1);
    }

    #[test]
    fn squarefree_measure_examples() {
        let ln = libm::log;
        assert!((surd("2^(1/3)").mahler_squarefree().unwrap().get() - ln(2.0)).abs() < 1e-12);
        assert!((surd("30^(1/2)").mahler_squarefree().unwrap().get() - ln(30.0)).abs() < 1e-12);
        assert!((surd("7^(1/1)").mahler_squarefree().unwrap().get() - ln(7.0)).abs() < 1e-12);
        assert_eq!(surd("12^(1/2)").mahler_squarefree(), Err(Error::NotSquarefree));
        assert_eq!(surd("(3/2)^(1/2)").mahler_squarefree(), Err(Error::NotSquarefree));
        assert_eq!(surd("1^(1/2)").mahler_squarefree(), Err(Error::NotSquarefree));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(surd("21^(1/2)").norm().to_string(), "-21");
        assert_eq!(surd("(7/3)^(1/2)").norm().to_string(), "-7/3");
        assert_eq!(surd("5^(1/1)").norm().to_string(), "5");
        assert_eq!(surd("2^(1/3)").norm().to_string(), "2");
        // 8^(1/6) = √2
        assert_eq!(surd("8^(1/6)").norm().to_string(), "-2");
    }

    #[test]
    fn general_measure_uses_leading_coefficient() {
        // √(7/3): 3x² − 7, both roots of modulus √(7/3) > 1 → ln 3 + ln(7/3).
        let m = surd("(7/3)^(1/2)").mahler().get();
        assert!((m - libm::log(7.0)).abs() < 1e-12);
        // (2/9)^(1/2): 9x² − 2, roots inside → ln 9.
        let m = surd("(2/9)^(1/2)").mahler().get();
        assert!((m - libm::log(9.0)).abs() < 1e-12);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(surd("(7/3)^(1/2)").to_string(), "(7/3)^(1/2)");
        assert_eq!(surd("30^(1/2)").to_string(), "30^(1/2)");
        for bad in ["30", "30^(1/0)", "7/3^(1/2)", "(7/3^(1/2)", "30^(2/3)"] {
            assert!(bad.parse::<Surd>().is_err(), "{bad}");
        }
        assert!("(-2)^(1/2)".parse::<Surd>().is_err());
    }
}
