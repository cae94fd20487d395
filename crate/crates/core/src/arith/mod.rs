//! Exact integer and rational arithmetic: factorization, valuations, the
//! numerator/denominator divisibility convention and gcd chains.

mod factor;
pub(crate) mod prime;
mod rational;

use alloc::vec::Vec;

pub use factor::{factorize, factorize_u128, Factorization};
pub use rational::{Natural, Rational};

use crate::{Error, Result};

/// Primality of `p`; fails with [`Error::FactorizationOverflow`] above 2^96.
pub fn is_prime(p: &Natural) -> Result<bool> {
    let p = p.to_u128().ok_or(Error::FactorizationOverflow)?;
    if p > prime::FACTOR_BOUND {
        return Err(Error::FactorizationOverflow);
    }
    Ok(prime::is_prime_u128(p))
}

fn valuation(p: &Natural, n: &Natural) -> i64 {
    let mut n = n.clone();
    let mut v = 0;
    while n.is_multiple_of(p) {
        n = n.div_exact(p);
        v += 1;
    }
    v
}

/// p-adic valuation `ν_p(num) − ν_p(den)` of a nonzero rational.
pub fn nu(p: &Natural, x: &Rational) -> Result<i64> {
    if !is_prime(p)? {
        return Err(Error::NotPrime);
    }
    Ok(valuation(p, x.numer()) - valuation(p, x.denom()))
}

/// Which side of a reduced fraction an integer divides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Divisibility {
    Numerator,
    Denominator,
    No,
}

/// `d` divides `r = m/n` when it divides `m` or `n` of the reduced form.
///
/// For `d >= 2` at most one side can match since `gcd(m, n) = 1`.
pub fn divides_rational(d: &Natural, r: &Rational) -> Divisibility {
    if r.numer().is_multiple_of(d) {
        Divisibility::Numerator
    } else if r.denom().is_multiple_of(d) {
        Divisibility::Denominator
    } else {
        Divisibility::No
    }
}

/// Splits `m` along `r_1, …, r_N`:
/// `m_n = gcd(r_n, m / (m_1 ⋯ m_{n−1}))`.
///
/// Requires `m | ∏ r_n`; then `∏ m_n = m` and `m_n | r_n`. The output has the
/// same length as `r`, trailing ones included.
pub fn gcd_chain(m: &Natural, r: &[Natural]) -> Result<Vec<Natural>> {
    let product = r.iter().fold(Natural::one(), |acc, x| &acc * x);
    if m.is_zero() || !product.is_multiple_of(m) {
        return Err(Error::DivisibilityViolation("m does not divide the product of r"));
    }
    let mut rest = m.clone();
    let chain = r
        .iter()
        .map(|rn| {
            let mn = rn.gcd(&rest);
            rest = rest.div_exact(&mn);
            mn
        })
        .collect();
    debug_assert!(rest.is_one());
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(&n(2), &q("12")), Ok(2));
        assert_eq!(nu(&n(5), &q("7/50")), Ok(-2));
        assert_eq!(nu(&n(3), &q("7")), Ok(0));
        assert_eq!(nu(&n(4), &q("7")), Err(Error::NotPrime));
        assert_eq!(nu(&n(1), &q("7")), Err(Error::NotPrime));
    }

    #[test]
    fn divides_rational_examples() {
        assert_eq!(divides_rational(&n(7), &q("7/6")), Divisibility::Numerator);
        assert_eq!(divides_rational(&n(5), &q("7/50")), Divisibility::Denominator);
        assert_eq!(divides_rational(&n(4), &q("2/3")), Divisibility::No);
        // Reduced form matters: 14/6 = 7/3.
        assert_eq!(divides_rational(&n(2), &q("14/6")), Divisibility::No);
    }

    #[test]
    fn gcd_chain_examples() {
        assert_eq!(gcd_chain(&n(6), &[n(4), n(9)]).unwrap(), vec![n(2), n(3)]);
        assert_eq!(gcd_chain(&n(12), &[n(8), n(9), n(5)]).unwrap(), vec![n(4), n(3), n(1)]);
        assert_eq!(gcd_chain(&n(1), &[n(7), n(7)]).unwrap(), vec![n(1), n(1)]);
    }

    #[test]
    fn gcd_chain_requires_divisibility() {
        assert!(matches!(gcd_chain(&n(5), &[n(4), n(9)]), Err(Error::DivisibilityViolation(_))));
        assert!(matches!(gcd_chain(&n(8), &[n(2), n(2)]), Err(Error::DivisibilityViolation(_))));
        assert_eq!(gcd_chain(&n(1), &[]).unwrap(), vec![]);
    }
}
