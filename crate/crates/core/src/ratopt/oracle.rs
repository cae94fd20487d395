//! Exhaustive reference for the rational optimizer. No pruning: every
//! unordered factorization of the numerator and of the denominator, and every
//! partial matching between the two block lists.

use alloc::vec::Vec;

use num_integer::Integer;

use super::TParam;
use crate::arith::{factorize, factorize_u128, Factorization};
use crate::{Error, Rational, Result};

/// Largest total prime multiplicity the oracle accepts.
pub const ORACLE_MULTIPLICITY_CAP: u32 = 12;

fn divisors(f: &Factorization) -> Vec<u128> {
    let mut out = alloc::vec![1u128];
    for &(p, e) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut x = d;
            for _ in 0..=e {
                next.push(x);
                x *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

/// All multisets of divisors `> 1` multiplying to `n`, as nondecreasing lists.
fn factorizations(n: u128, divisors: &[u128]) -> Vec<Vec<u128>> {
    fn go(n: u128, min: u128, divisors: &[u128], cur: &mut Vec<u128>, out: &mut Vec<Vec<u128>>) {
        if n == 1 {
            out.push(cur.clone());
            return;
        }
        for &d in divisors.iter().filter(|&&d| d > 1 && d >= min && d <= n) {
            if n % d == 0 {
                cur.push(d);
                go(n / d, d, divisors, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, divisors, &mut Vec::new(), &mut out);
    out
}

fn pair_measure(x: u128, y: u128) -> f64 {
    let g = x.gcd(&y);
    libm::log((x / g).max(y / g) as f64)
}

/// Minimum aggregated cost over all partial matchings of `xs` with `ys`.
fn best_matching(xs: &[u128], ys: &[u128], used: &mut [bool], t: TParam) -> f64 {
    let Some((&x, rest)) = xs.split_first() else {
        return ys
            .iter()
            .zip(used.iter())
            .filter(|(_, &u)| !u)
            .fold(0.0, |acc, (&y, _)| t.combine(acc, t.factor_cost(pair_measure(1, y))));
    };
    let mut best = t.combine(t.factor_cost(pair_measure(x, 1)), best_matching(rest, ys, used, t));
    for j in 0..ys.len() {
        if !used[j] {
            used[j] = true;
            let c = t.combine(t.factor_cost(pair_measure(x, ys[j])), best_matching(rest, ys, used, t));
            used[j] = false;
            best = best.min(c);
        }
    }
    best
}

/// Cost of the best pairing of numerator blocks with denominator blocks,
/// trying every partial matching. Each pair `(x, y)` costs `M(x/y)`.
pub fn unrestricted_pairing_cost(num_blocks: &[u128], den_blocks: &[u128], t: TParam) -> f64 {
    let mut used = alloc::vec![false; den_blocks.len()];
    t.finish(best_matching(num_blocks, den_blocks, &mut used, t))
}

/// Cost of pairing the `i`-th largest numerator block with the `i`-th largest
/// denominator block; leftovers stand alone.
///
/// Equals [`unrestricted_pairing_cost`] whenever every numerator block is
/// coprime to every denominator block.
pub fn sorted_pairing_cost(num_blocks: &[u128], den_blocks: &[u128], t: TParam) -> f64 {
    let mut xs = num_blocks.to_vec();
    let mut ys = den_blocks.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    ys.sort_unstable_by(|a, b| b.cmp(a));
    let n = xs.len().max(ys.len());
    let acc = (0..n).fold(0.0, |acc, i| {
        let x = xs.get(i).copied().unwrap_or(1);
        let y = ys.get(i).copied().unwrap_or(1);
        t.combine(acc, t.factor_cost(pair_measure(x, y)))
    });
    t.finish(acc)
}

/// `M_t(q)` by exhaustive enumeration; only for `Ω(num·den) <= 12`.
pub fn metric_mahler_rational_oracle(q: &Rational, t: TParam) -> Result<f64> {
    metric_mahler_rational_oracle_with_extraneous(q, t, 1)
}

/// Like [`metric_mahler_rational_oracle`], but writes `q = (num·e)/(den·e)` and
/// lets blocks carry the extraneous cofactor `e`, with each pair measured after
/// reduction. The result never beats the plain oracle; this exists to check
/// that claim.
pub fn metric_mahler_rational_oracle_with_extraneous(q: &Rational, t: TParam, extraneous: u128) -> Result<f64> {
    if extraneous == 0 {
        return Err(Error::Zero);
    }
    let num = factorize(q.numer())?;
    let den = factorize(q.denom())?;
    let extra = factorize_u128(extraneous)?;
    let omega = num.total_multiplicity() + den.total_multiplicity() + 2 * extra.total_multiplicity();
    if omega > ORACLE_MULTIPLICITY_CAP {
        return Err(Error::TooLarge("oracle multiplicity"));
    }
    let num = num.multiply(&extra);
    let den = den.multiply(&extra);
    let too_large = || Error::TooLarge("oracle operand");
    let n = num.product().to_u128().ok_or_else(too_large)?;
    let d = den.product().to_u128().ok_or_else(too_large)?;
    let num_splits = factorizations(n, &divisors(&num));
    let den_splits = factorizations(d, &divisors(&den));
    let best = num_splits
        .iter()
        .flat_map(|xs| den_splits.iter().map(move |ys| unrestricted_pairing_cost(xs, ys, t)))
        .fold(f64::INFINITY, f64::min);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratopt::metric_mahler_rational;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn factorization_counts() {
        // Multiplicative partitions: 12 → {12, 2·6, 3·4, 2·2·3}.
        let f = factorize_u128(12).unwrap();
        assert_eq!(factorizations(12, &divisors(&f)).len(), 4);
        assert_eq!(factorizations(1, &[1]), alloc::vec![Vec::<u128>::new()]);
        // p(12) = 77 partitions of the exponent of 2^12.
        let f = factorize_u128(4096).unwrap();
        assert_eq!(factorizations(4096, &divisors(&f)).len(), 77);
    }

    #[test]
    fn primes_cannot_be_split() {
        for p in ["2", "7", "1/13", "-101"] {
            for t in [TParam::Finite(1.0), TParam::Finite(2.5), TParam::Infinity] {
                let v = metric_mahler_rational_oracle(&q(p), t).unwrap();
                assert!((v - q(p).abs().numer().max(q(p).denom()).ln()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn agrees_with_optimizer_on_examples() {
        for (s, t) in [("6", 2.0), ("360/7", 1.5), ("4/3", 2.0), ("1024/3", 3.0)] {
            let t = TParam::new(t).unwrap();
            let fast = metric_mahler_rational(&q(s), t).unwrap().total_cost();
            let slow = metric_mahler_rational_oracle(&q(s), t).unwrap();
            assert!((fast - slow).abs() < 1e-9, "{s}: {fast} vs {slow}");
        }
    }

    #[test]
    fn multiplicity_cap() {
        assert!(metric_mahler_rational_oracle(&q("4096"), TParam::Infinity).is_ok());
        assert_eq!(metric_mahler_rational_oracle(&q("8192"), TParam::Infinity), Err(Error::TooLarge("oracle multiplicity")));
    }

    #[test]
    fn extraneous_primes_never_help() {
        for (s, e) in [("6", 5u128), ("4/3", 7), ("10/3", 2), ("7/6", 35)] {
            for t in [TParam::Finite(1.0), TParam::Finite(2.0), TParam::Infinity] {
                let plain = metric_mahler_rational_oracle(&q(s), t).unwrap();
                let extended = metric_mahler_rational_oracle_with_extraneous(&q(s), t, e).unwrap();
                assert!(extended >= plain - 1e-12, "{s} with {e}");
            }
        }
    }

    #[test]
    fn sorted_pairing_matches_full_search_on_coprime_blocks() {
        let t = TParam::Finite(2.0);
        let xs = [4, 9, 25];
        let ys = [7, 11];
        let a = sorted_pairing_cost(&xs, &ys, t);
        let b = unrestricted_pairing_cost(&xs, &ys, t);
        assert!((a - b).abs() < 1e-12);
    }
}
