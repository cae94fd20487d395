use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use super::field::FieldElement;
use super::SquarefreeD;
use crate::measure::{Algebraic, LogValue};
use crate::ratopt::{tnorm, TParam};
use crate::{Error, Rational, Result};

const MEASURE_TOL: f64 = 1e-9;
const MAX_COMMON_INDEX: u32 = 1 << 12;

/// Factors drawn from rationals, quadratic numbers and surds, with their
/// measures.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedDecomposition {
    factors: Vec<Algebraic>,
    measures: Vec<LogValue>,
}

impl MixedDecomposition {
    pub fn new(factors: Vec<Algebraic>) -> Self {
        let measures = factors.iter().map(Algebraic::mahler).collect();
        MixedDecomposition { factors, measures }
    }

    pub fn factors(&self) -> &[Algebraic] {
        &self.factors
    }

    pub fn measures(&self) -> &[LogValue] {
        &self.measures
    }

    pub fn cost(&self, t: TParam) -> f64 {
        tnorm(&self.measures, t)
    }

    /// Exact test of `∏ factors = D^(1/k)` (the real positive root).
    ///
    /// Products containing quadratic numbers are multiplied out in `ℚ(√D)` and
    /// need `k <= 2`. Otherwise every factor is real: the sign must be positive
    /// and the `L`-th powers must agree, `L` being the lcm of all root indices.
    pub fn multiplies_to(&self, d: &SquarefreeD, k: u32) -> Result<bool> {
        if k == 0 {
            return Err(Error::Domain("surd index must be positive"));
        }
        let has_quadratic = self.factors.iter().any(|f| matches!(f, Algebraic::Quadratic(_)));
        if has_quadratic {
            self.multiplies_in_field(d, k)
        } else {
            self.multiplies_by_powers(d, k)
        }
    }

    fn multiplies_in_field(&self, d: &SquarefreeD, k: u32) -> Result<bool> {
        let dv = d.value();
        let target = match k {
            1 => FieldElement::rational(&Rational::from_integer(dv as i128)?),
            2 => FieldElement::sqrt_d(),
            _ => return Err(Error::Domain("quadratic factors need a target of degree at most 2")),
        };
        let mut acc = FieldElement::one();
        for f in &self.factors {
            match FieldElement::embed(f, dv) {
                Some(e) => acc = acc.mul(&e, dv),
                None => return Ok(false),
            }
        }
        Ok(acc.same_as(&target))
    }

    fn multiplies_by_powers(&self, d: &SquarefreeD, k: u32) -> Result<bool> {
        let mut common = k;
        for f in &self.factors {
            if let Algebraic::Surd(s) = f {
                common = common.lcm(&s.index());
                if common > MAX_COMMON_INDEX {
                    return Err(Error::TooLarge("common root index"));
                }
            }
        }
        let mut acc = Rational::one();
        for f in &self.factors {
            let power = match f {
                Algebraic::Rational(q) => q.pow(common),
                Algebraic::Surd(s) => s.base().pow(common / s.index()),
                Algebraic::Quadratic(_) => unreachable!("handled in the field route"),
            };
            acc = &acc * &power;
        }
        let negative = self
            .factors
            .iter()
            .filter(|f| matches!(f, Algebraic::Rational(q) if q.is_negative()))
            .count()
            % 2
            == 1;
        let target = Rational::from_integer(d.value() as i128)?.pow(common / k);
        Ok(!negative && acc.abs() == target)
    }
}

impl fmt::Display for MixedDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Why a decomposition does not attain `M_t(D^(1/k))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InvalidReason {
    /// Fewer factors than primes of `D`.
    TooFewFactors { found: usize, needed: usize },
    /// The `rank`-th largest measure is not `log p_rank`.
    MeasureMismatch { rank: usize, measure: f64, expected: f64 },
    /// A factor beyond the first `L` has positive measure.
    ExtraMeasure { rank: usize, measure: f64 },
    /// `t = ∞`: the largest measure is not `log p_1`.
    MaxMismatch { measure: f64, expected: f64 },
}

impl InvalidReason {
    pub fn code(&self) -> &'static str {
        match self {
            InvalidReason::TooFewFactors { .. } => "too_few_factors",
            InvalidReason::MeasureMismatch { .. } => "measure_mismatch",
            InvalidReason::ExtraMeasure { .. } => "extra_measure",
            InvalidReason::MaxMismatch { .. } => "max_mismatch",
        }
    }
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::TooFewFactors { found, needed } => {
                write!(f, "{found} factors, at least {needed} needed")
            }
            InvalidReason::MeasureMismatch { rank, measure, expected } => {
                write!(f, "measure #{rank} is {measure}, expected {expected}")
            }
            InvalidReason::ExtraMeasure { rank, measure } => {
                write!(f, "measure #{rank} is {measure}, expected 0")
            }
            InvalidReason::MaxMismatch { measure, expected } => {
                write!(f, "largest measure is {measure}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Validation {
    Valid,
    Invalid(InvalidReason),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        *self == Validation::Valid
    }
}

/// Decides whether `dec` attains `M_t(D^(1/k))` for `t > 1`.
///
/// Finite `t`: sorted in decreasing order, the measures must be
/// `log p_1, …, log p_L` followed by zeros. `t = ∞`: the largest measure must
/// be `log p_1`.
pub fn validate_attaining_decomposition(
    d: &SquarefreeD,
    k: u32,
    t: TParam,
    dec: &MixedDecomposition,
) -> Result<Validation> {
    if !t.exceeds_one() {
        return Err(Error::TOutOfRange);
    }
    if !dec.multiplies_to(d, k)? {
        return Err(Error::ProductMismatch);
    }
    let expected: Vec<f64> = d.primes().iter().map(|&p| libm::log(p as f64)).collect();
    let mut measures: Vec<f64> = dec.measures().iter().map(|m| m.get()).collect();
    measures.sort_by(|a, b| b.total_cmp(a));

    if t.is_infinite() {
        let top = measures.first().copied().unwrap_or(0.0);
        return Ok(if (top - expected[0]).abs() <= MEASURE_TOL {
            Validation::Valid
        } else {
            Validation::Invalid(InvalidReason::MaxMismatch {
                measure: top,
                expected: expected[0],
            })
        });
    }
    if measures.len() < expected.len() {
        return Ok(Validation::Invalid(InvalidReason::TooFewFactors {
            found: measures.len(),
            needed: expected.len(),
        }));
    }
    for (rank, (&m, &e)) in measures.iter().zip(&expected).enumerate() {
        if (m - e).abs() > MEASURE_TOL {
            return Ok(Validation::Invalid(InvalidReason::MeasureMismatch {
                rank: rank + 1,
                measure: m,
                expected: e,
            }));
        }
    }
    if let Some((i, &m)) = measures.iter().enumerate().skip(expected.len()).find(|(_, &m)| m > MEASURE_TOL) {
        return Ok(Validation::Invalid(InvalidReason::ExtraMeasure { rank: i + 1, measure: m }));
    }
    Ok(Validation::Valid)
}
