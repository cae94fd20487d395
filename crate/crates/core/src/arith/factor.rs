use alloc::vec::Vec;

use super::prime::{is_prime_u128, pollard_rho, FACTOR_BOUND};
use super::Natural;
use crate::{Error, Result};

const TRIAL_LIMIT: u128 = 1_000_000;

/// Prime factorization of a positive integer, primes strictly increasing.
///
/// Primes are held as `u128`; the engine refuses inputs above 2^96.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    /// Builds from `(prime, exponent)` pairs, checking every prime and merging
    /// duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u128, u32)>) -> Result<Self> {
        let mut factors: Vec<(u128, u32)> = Vec::new();
        for (p, e) in pairs {
            if p > FACTOR_BOUND {
                return Err(Error::FactorizationOverflow);
            }
            if !is_prime_u128(p) {
                return Err(Error::NotPrime);
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        Ok(Self::normalized(factors))
    }

    fn normalized(mut factors: Vec<(u128, u32)>) -> Self {
        factors.sort_unstable();
        let mut merged: Vec<(u128, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => merged.push((p, e)),
            }
        }
        Self { factors: merged }
    }

    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl DoubleEndedIterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total multiplicity Ω(n).
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn largest_prime(&self) -> Option<u128> {
        self.factors.last().map(|&(p, _)| p)
    }

    pub fn product(&self) -> Natural {
        let mut acc = Natural::one();
        for &(p, e) in &self.factors {
            let pe = Natural::from(p).pow(e);
            acc = &acc * &pe;
        }
        acc
    }

    /// Product of two factorizations (exponents add).
    pub fn multiply(&self, other: &Self) -> Self {
        let mut all = self.factors.clone();
        all.extend_from_slice(&other.factors);
        Self::normalized(all)
    }
}

/// Complete factorization of `n >= 1`.
///
/// Trial division up to 10^6, then Pollard rho with every factor certified by
/// [`is_prime_u128`]. Inputs above 2^96 fail with
/// [`Error::FactorizationOverflow`].
pub fn factorize(n: &Natural) -> Result<Factorization> {
    let n = n.to_u128().ok_or(Error::FactorizationOverflow)?;
    factorize_u128(n)
}

pub fn factorize_u128(mut n: u128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > FACTOR_BOUND {
        return Err(Error::FactorizationOverflow);
    }
    let mut factors = Vec::new();
    let strip = |n: &mut u128, p: u128, factors: &mut Vec<(u128, u32)>| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    strip(&mut n, 2, &mut factors);
    strip(&mut n, 3, &mut factors);
    let mut p = 5u128;
    while p <= TRIAL_LIMIT && p * p <= n {
        if n <= u64::MAX as u128 {
            let small = n as u64;
            if small % p as u64 == 0 {
                strip(&mut n, p, &mut factors);
            }
            if small % (p as u64 + 2) == 0 {
                strip(&mut n, p + 2, &mut factors);
            }
        } else {
            if n % p == 0 {
                strip(&mut n, p, &mut factors);
            }
            if n % (p + 2) == 0 {
                strip(&mut n, p + 2, &mut factors);
            }
        }
        p += 6;
    }
    if n > 1 {
        // Every remaining factor exceeds the trial limit.
        let mut stack = alloc::vec![n];
        while let Some(m) = stack.pop() {
            if m < TRIAL_LIMIT * TRIAL_LIMIT || is_prime_u128(m) {
                debug_assert!(is_prime_u128(m));
                factors.push((m, 1));
            } else {
                let d = pollard_rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
    }
    Ok(Factorization::normalized(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u128) -> Vec<(u128, u32)> {
        factorize_u128(n).unwrap().factors().to_vec()
    }

    #[test]
    fn worked_examples() {
        assert!(pairs(1).is_empty());
        assert_eq!(pairs(30), [(2, 1), (3, 1), (5, 1)]);
        assert_eq!(pairs(1 << 60), [(2, 60)]);
    }

    #[test]
    fn zero_and_overflow() {
        assert_eq!(factorize_u128(0), Err(Error::Zero));
        assert!(factorize_u128(1 << 96).is_ok());
        assert_eq!(factorize_u128((1 << 96) + 1), Err(Error::FactorizationOverflow));
    }

    #[test]
    fn large_semiprimes_and_prime_powers() {
        let p = 1_000_000_007u128;
        let q = 998_244_353u128;
        assert_eq!(pairs(p * q), [(q, 1), (p, 1)]);
        assert_eq!(pairs(p * p * 6), [(2, 1), (3, 1), (p, 2)]);
        let m61 = (1u128 << 61) - 1;
        assert_eq!(pairs(m61 * 1_000_003), [(1_000_003, 1), (m61, 1)]);
    }

    #[test]
    fn reconstructs_product() {
        for n in (1u128..5000).chain([720_720, 999_999_999_989, 600_851_475_143]) {
            let f = factorize_u128(n).unwrap();
            assert_eq!(f.product(), Natural::from(n));
            assert!(f.primes().all(is_prime_u128));
        }
    }

    #[test]
    fn from_pairs_rejects_composites() {
        assert_eq!(Factorization::from_pairs([(4, 1)]), Err(Error::NotPrime));
        let f = Factorization::from_pairs([(3, 1), (2, 2), (3, 1)]).unwrap();
        assert_eq!(f.factors(), [(2, 2), (3, 2)]);
    }
}
