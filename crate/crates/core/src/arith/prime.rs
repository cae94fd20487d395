//! Primality testing and splitting for integers up to 2^96.
//!
//! Miller-Rabin with the first 13 prime bases is deterministic below
//! 3 317 044 064 679 887 385 961 981 (about 2^81.4). Above that bound the test
//! is completed with a strong Lucas test, i.e. the combination is BPSW.

use num_integer::{Integer, Roots};

/// Largest integer the factorization engine accepts.
pub(crate) const FACTOR_BOUND: u128 = 1 << 96;

const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Bound below which the 13 bases above decide primality.
const MR_DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

/// `a * b mod n` for `n <= 2^96`.
pub(crate) fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a % n) * (b % n) % n;
    }
    debug_assert!(n <= FACTOR_BOUND);
    let a = a % n;
    let b = b % n;
    let mut acc = 0u128;
    // b < 2^96: fold it in three 32-bit limbs so every product stays below 2^128.
    for shift in [64u32, 32, 0] {
        let limb = (b >> shift) & 0xffff_ffff;
        acc = ((acc << 32) % n + (a * limb) % n) % n;
    }
    acc
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u128, base: u128) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol `(a / n)` for odd `n`.
fn jacobi(mut a: u128, mut n: u128) -> i32 {
    a %= n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn half_mod(x: u128, n: u128) -> u128 {
    if x % 2 == 0 {
        x / 2
    } else {
        (x + n) / 2
    }
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    (a + b) % n
}

fn sub_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters. `n` odd, not a square.
fn strong_lucas(n: u128) -> bool {
    // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    let mut abs_d: u128 = 5;
    let mut negative = false;
    loop {
        let d_mod = if negative { n - abs_d % n } else { abs_d % n };
        match jacobi(d_mod, n) {
            -1 => break,
            0 if abs_d % n != 0 => return false,
            _ => {}
        }
        abs_d += 2;
        negative = !negative;
    }
    let d_mod = if negative { n - abs_d % n } else { abs_d % n };
    // Q = (1 - D) / 4, reduced mod n.
    let q = if negative {
        ((1 + abs_d) / 4) % n
    } else {
        sub_mod(0, ((abs_d - 1) / 4) % n, n)
    };
    let p = 1u128;

    let mut k = n + 1;
    let s = k.trailing_zeros();
    k >>= s;

    let mut u = 1u128;
    let mut v = p;
    let mut qk = q;
    let bits = 128 - k.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = mul_mod(u, v, n);
        v = sub_mod(mul_mod(v, v, n), mul_mod(2, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if (k >> i) & 1 == 1 {
            let nu = half_mod(add_mod(mul_mod(p, u, n), v, n), n);
            let nv = half_mod(add_mod(mul_mod(d_mod, u, n), mul_mod(p, v, n), n), n);
            u = nu;
            v = nv;
            qk = mul_mod(qk, q, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub_mod(mul_mod(v, v, n), mul_mod(2, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Primality for `n <= 2^96`.
pub(crate) fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    if !MR_BASES.iter().all(|&b| strong_probable_prime(n, b)) {
        return false;
    }
    if n < MR_DETERMINISTIC_BOUND {
        return true;
    }
    let r = n.sqrt();
    if r * r == n {
        return false;
    }
    strong_lucas(n)
}

/// Finds a nontrivial factor of the odd composite `n` (Brent's variant of rho).
pub(crate) fn pollard_rho(n: u128) -> u128 {
    const BATCH: u64 = 128;
    let diff = |a: u128, b: u128| if a > b { a - b } else { b - a };
    for c in 1u128.. {
        let step = |x: u128| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u128;
        let mut x = y;
        let mut ys = y;
        let mut q = 1u128;
        let mut g = 1u128;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, diff(x, y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = diff(x, ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausts every polynomial constant")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_prime(n: u128) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn agrees_with_trial_division_below_20000() {
        for n in 0..20_000u128 {
            assert_eq!(is_prime_u128(n), naive_prime(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // Strong pseudoprimes to several small bases.
        for n in [2047u128, 3_215_031_751, 3_825_123_056_546_413_051, 318_665_857_834_031_151_167_461] {
            assert!(!is_prime_u128(n), "{n}");
        }
    }

    #[test]
    fn large_primes_beyond_deterministic_bound() {
        // 2^89 - 1 is a Mersenne prime, above the 13-base bound.
        let m89 = (1u128 << 89) - 1;
        assert!(m89 > MR_DETERMINISTIC_BOUND);
        assert!(is_prime_u128(m89));
        assert!(strong_lucas(m89));
        // (2^61 - 1) * 2^31 - 1 style composites: product of two known primes.
        let composite = ((1u128 << 61) - 1) * 1_000_000_007;
        assert!(!is_prime_u128(composite));
    }

    #[test]
    fn lucas_accepts_small_primes_and_rejects_composites() {
        for p in [7u128, 11, 13, 101, 1009, 65_537] {
            assert!(strong_lucas(p), "{p}");
        }
        for c in [15u128, 91, 1001, 5459, 5777] {
            // 5459 and 5777 are the first strong Lucas pseudoprimes; only
            // check that the MR stage rejects them overall.
            assert!(!is_prime_u128(c), "{c}");
        }
    }

    #[test]
    fn rho_splits_semiprimes() {
        let p = 1_000_003u128;
        let q = 998_244_353u128;
        let f = pollard_rho(p * q);
        assert!(f == p || f == q);
        let big = ((1u128 << 61) - 1) * 4_294_967_291;
        let g = pollard_rho(big);
        assert!(g > 1 && g < big && big % g == 0);
    }

    #[test]
    fn mul_mod_wide_modulus() {
        let n = (1u128 << 89) - 1;
        let a = n - 2;
        let b = n - 3;
        // (-2)(-3) = 6 mod n
        assert_eq!(mul_mod(a, b, n), 6);
    }
}
