use alloc::vec::Vec;

use num_integer::Roots;

use super::decomposition::{validate_attaining_decomposition, MixedDecomposition};
use super::{metric_mahler_surd, SquarefreeD};
use crate::measure::{Algebraic, QuadraticNumber, Root, Stability, Surd};
use crate::ratopt::TParam;
use crate::{Error, Rational, Result};

/// Largest `p_1` for which the quadratic enumeration runs.
pub const ENUMERATION_PRIME_LIMIT: u64 = 10_000_000;

/// Polynomial shapes per leading coefficient: `ax² ± p` and `ax² ± px + p`.
const SHAPES: u64 = 4;

/// Record of the small-quadratic search for one `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    /// Inclusive range of leading coefficients `a`.
    pub a_range: (u64, u64),
    /// Polynomials examined, counting `f` and its reversal separately.
    pub forms_checked: u64,
    /// `⌊√(4p²/D)⌋`, the largest `v` compatible with `Δ = D·v²` and `a < p`.
    pub v_bound: u64,
    /// Numbers passing the discriminant test, both orientations, both roots.
    pub candidates: Vec<QuadraticNumber>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttainmentReport {
    pub d: SquarefreeD,
    pub t: TParam,
    pub attained: bool,
    pub witness: Option<MixedDecomposition>,
    pub value: f64,
    pub certificate: Certificate,
}

/// `Δ = D·v²` for some integer `v > 0`, decided exactly.
fn discriminant_in_field(delta: i128, d: u64) -> bool {
    let d = d as i128;
    delta > 0 && delta % d == 0 && {
        let v2 = delta / d;
        let v = v2.sqrt();
        v * v == v2
    }
}

fn shapes(a: u64, p: u64) -> [(i64, i64, i64); SHAPES as usize] {
    let (a, p) = (a as i64, p as i64);
    [(a, 0, p), (a, 0, -p), (a, p, p), (a, -p, p)]
}

fn with_both_roots(out: &mut Vec<QuadraticNumber>, (a, b, c): (i64, i64, i64)) {
    for root in [Root::Plus, Root::Minus] {
        out.push(QuadraticNumber::from_any_sign(a, b, c, root).expect("discriminant is not a square"));
    }
}

fn check_prime(d: &SquarefreeD) -> Result<u64> {
    let p = d.largest_prime();
    if p > ENUMERATION_PRIME_LIMIT {
        return Err(Error::TooLarge("largest prime for enumeration"));
    }
    Ok(p)
}

/// Quadratic numbers in `ℚ(√D)` of the forms `ax² ± p`, `ax² ± px + p` with
/// `1 <= a < p = p_1` whose discriminant is `D·v²`. Both roots of each
/// polynomial are listed. All of them have measure `log p`, and both
/// conjugates lie outside the unit circle.
pub fn enumerate_small_quadratics(d: &SquarefreeD) -> Result<Vec<QuadraticNumber>> {
    let p = check_prime(d)?;
    let mut out = Vec::new();
    for a in 1..p {
        for (a, b, c) in shapes(a, p) {
            let delta = (b as i128).pow(2) - 4 * a as i128 * c as i128;
            if discriminant_in_field(delta, d.value()) {
                with_both_roots(&mut out, (a, b, c));
            }
        }
    }
    debug_assert!(out.iter().all(|q| q.stability() == Stability::StableOutside));
    Ok(out)
}

fn survey(d: &SquarefreeD) -> Result<Certificate> {
    let p = check_prime(d)?;
    let mut candidates = enumerate_small_quadratics(d)?;
    // Reversed polynomials have the same discriminant; they cover p | den(Norm).
    let inverses: Vec<QuadraticNumber> = candidates.iter().map(QuadraticNumber::inverse).collect();
    candidates.extend(inverses);
    let p2 = p as u128 * p as u128;
    Ok(Certificate {
        a_range: (1, p - 1),
        forms_checked: 2 * SHAPES * (p - 1),
        v_bound: (4 * p2 / d.value() as u128).sqrt() as u64,
        candidates,
    })
}

/// `{√(p_1 / (p_2⋯p_L)), p_2, …, p_L}`; needs `p_2⋯p_L < p_1` so that the
/// surd has measure `log p_1`.
fn field_witness(d: &SquarefreeD) -> Option<MixedDecomposition> {
    let p1 = d.largest_prime();
    let rest = d.cofactor();
    if rest >= p1 {
        return None;
    }
    let base = Rational::from_ratio(p1 as i128, rest as u128).expect("nonzero");
    let mut factors = alloc::vec![Algebraic::Surd(Surd::new(base, 2).expect("positive base"))];
    factors.extend(d.primes()[1..].iter().map(|&p| Algebraic::Rational(Rational::from_integer(p as i128).expect("nonzero"))));
    Some(MixedDecomposition::new(factors))
}

/// Whether `M_t(√D)` is attained by numbers of `ℚ(√D)`, for `t > 1`: exactly
/// when `D < p_1²`.
pub fn attainment_in_q_sqrt_d(d: &SquarefreeD, t: TParam) -> Result<AttainmentReport> {
    if !t.exceeds_one() {
        return Err(Error::TOutOfRange);
    }
    let (value, _) = metric_mahler_surd(d, 2, t)?;
    let certificate = survey(d)?;
    let witness = if d.below_largest_square() {
        let w = field_witness(d).expect("D < p_1² implies p_2⋯p_L < p_1");
        debug_assert!(validate_attaining_decomposition(d, 2, t, &w).is_ok_and(|v| v.is_valid()));
        Some(w)
    } else {
        None
    };
    Ok(AttainmentReport {
        d: d.clone(),
        t,
        attained: witness.is_some(),
        witness,
        value,
        certificate,
    })
}

/// Re-runs the small-quadratic enumeration in the regime `D >= p_1²`, where no
/// candidate may exist.
pub fn certify_non_attainment(d: &SquarefreeD, t: TParam) -> Result<Certificate> {
    if !t.exceeds_one() {
        return Err(Error::TOutOfRange);
    }
    if d.below_largest_square() {
        return Err(Error::WrongRegime);
    }
    survey(d)
}
