use alloc::vec::Vec;

use super::{RationalDecomposition, TParam};
use crate::arith::{gcd_chain, Natural};
use crate::{Error, Rational, Result};

/// `±r/s` in lowest terms, typically the norm of one factor of a
/// decomposition over a number field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormPair {
    negative: bool,
    r: Natural,
    s: Natural,
}

impl NormPair {
    /// Reduces `r/s` on construction.
    pub fn new(negative: bool, r: Natural, s: Natural) -> Result<Self> {
        let q = Rational::new(negative, r, s)?;
        Ok(q.into())
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn r(&self) -> &Natural {
        &self.r
    }

    pub fn s(&self) -> &Natural {
        &self.s
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.negative, self.r.clone(), self.s.clone()).expect("r and s are nonzero")
    }
}

impl From<Rational> for NormPair {
    fn from(q: Rational) -> Self {
        NormPair {
            negative: q.is_negative(),
            r: q.numer().clone(),
            s: q.denom().clone(),
        }
    }
}

/// Pushes a decomposition down to ℚ through its factor norms.
///
/// With `q = m/m'` reduced, splits `m` along the `r_n` and `m'` along the `s_n`
/// by gcd chains and returns the factors `m_n/m'_n` in input order, units
/// dropped and the sign of `q` on the first factor. Since `m_n | r_n` and
/// `m'_n | s_n`, each factor costs at most `log max(r_n, s_n)`.
pub fn reduce_to_rational_decomposition(q: &Rational, norms: &[NormPair], t: TParam) -> Result<RationalDecomposition> {
    let product = norms.iter().fold(Rational::one(), |acc, n| &acc * &n.to_rational());
    if product.abs() != q.abs() {
        return Err(Error::DivisibilityViolation("norm pairs do not multiply to ±q"));
    }
    let rs: Vec<Natural> = norms.iter().map(|n| n.r.clone()).collect();
    let ss: Vec<Natural> = norms.iter().map(|n| n.s.clone()).collect();
    let top = gcd_chain(q.numer(), &rs)?;
    let bottom = gcd_chain(q.denom(), &ss)?;
    let mut factors: Vec<Rational> = top
        .into_iter()
        .zip(bottom)
        .map(|(m, m_prime)| Rational::new(false, m, m_prime).expect("chain entries are positive"))
        .filter(|f| !f.is_unit())
        .collect();
    if q.is_negative() {
        if let Some(first) = factors.first_mut() {
            *first = -first.clone();
        }
    }
    Ok(RationalDecomposition::from_factors(factors, t))
}
