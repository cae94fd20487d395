//! Squarefree radicands: `M_t(D^(1/k))` in closed form, attainment inside
//! `ℚ(√D)`, the small-quadratic enumeration behind it, and validation of
//! candidate attaining decompositions.

mod attain;
mod decomposition;
mod field;

pub use attain::{
    attainment_in_q_sqrt_d, certify_non_attainment, enumerate_small_quadratics, AttainmentReport, Certificate,
    ENUMERATION_PRIME_LIMIT,
};
pub use decomposition::{validate_attaining_decomposition, InvalidReason, MixedDecomposition, Validation};
pub use field::SquarefreeD;

use alloc::vec::Vec;

use crate::measure::{Algebraic, Surd};
use crate::ratopt::TParam;
use crate::{Error, Rational, Result};

/// `M_t(D^(1/k))` and the witness `{p_1^(1/k), …, p_L^(1/k)}`.
///
/// The value does not depend on `k`: `(Σ (log p_ℓ)^t)^(1/t)`, or `log p_1` for
/// `t = ∞`. For `k = 1` the witness factors are plain rationals.
pub fn metric_mahler_surd(d: &SquarefreeD, k: u32, t: TParam) -> Result<(f64, MixedDecomposition)> {
    if k == 0 {
        return Err(Error::Domain("surd index must be positive"));
    }
    let factors: Vec<Algebraic> = d
        .primes()
        .iter()
        .map(|&p| {
            let p = Rational::from_integer(p as i128).expect("primes are nonzero");
            if k == 1 {
                Algebraic::Rational(p)
            } else {
                Algebraic::Surd(Surd::new(p, k).expect("positive base"))
            }
        })
        .collect();
    let dec = MixedDecomposition::new(factors);
    Ok((dec.cost(t), dec))
}
