//! `M_t(q)` for nonzero rational `q`, with an optimal rational witness.
//!
//! A rational decomposition of `q = m/m'` can always be taken with factors
//! `u_n/v_n` where `∏ u_n = m` and `∏ v_n = m'`: any decomposition into
//! algebraic numbers can be pushed down to such a rational one without
//! increasing the cost (see [`reduce_to_rational_decomposition`]). The
//! optimizer therefore searches exactly that divisor-pair space.

mod oracle;
mod reduce;
mod search;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use oracle::{
    metric_mahler_rational_oracle, metric_mahler_rational_oracle_with_extraneous, sorted_pairing_cost,
    unrestricted_pairing_cost, ORACLE_MULTIPLICITY_CAP,
};
pub use reduce::{reduce_to_rational_decomposition, NormPair};

use crate::arith::{factorize, Factorization};
use crate::measure::{mahler_rational, LogValue};
use crate::{Error, Rational, Result};

/// The exponent `t ∈ [1, ∞]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub enum TParam {
    Finite(f64),
    Infinity,
}

impl TParam {
    /// `t = +inf` maps to [`TParam::Infinity`]; NaN and `t < 1` are rejected.
    pub fn new(t: f64) -> Result<Self> {
        if t.is_nan() || t < 1.0 {
            Err(Error::InvalidT)
        } else if t == f64::INFINITY {
            Ok(TParam::Infinity)
        } else {
            Ok(TParam::Finite(t))
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            TParam::Finite(t) => Some(t),
            TParam::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == TParam::Infinity
    }

    /// `true` when `t > 1` (including ∞).
    pub fn exceeds_one(self) -> bool {
        self.finite().is_none_or(|t| t > 1.0)
    }

    pub(crate) fn factor_cost(self, measure: f64) -> f64 {
        match self {
            TParam::Finite(t) => libm::pow(measure, t),
            TParam::Infinity => measure,
        }
    }

    pub(crate) fn combine(self, acc: f64, cost: f64) -> f64 {
        match self {
            TParam::Finite(_) => acc + cost,
            TParam::Infinity => acc.max(cost),
        }
    }

    pub(crate) fn finish(self, acc: f64) -> f64 {
        match self {
            TParam::Finite(t) if t == 1.0 => acc,
            TParam::Finite(t) => libm::pow(acc, 1.0 / t),
            TParam::Infinity => acc,
        }
    }
}

impl fmt::Display for TParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TParam::Finite(t) => fmt::Display::fmt(t, f),
            TParam::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for TParam {
    type Err = Error;

    /// The literal `inf`, or a decimal `>= 1`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(TParam::Infinity);
        }
        let t: f64 = s.parse().map_err(|_| Error::Parse(s.to_string()))?;
        if !t.is_finite() {
            return Err(Error::Parse(s.to_string()));
        }
        TParam::new(t)
    }
}

/// `L_t` norm of a measure vector, or its maximum for `t = ∞`.
pub fn tnorm(measures: &[LogValue], t: TParam) -> f64 {
    let acc = measures.iter().fold(0.0, |acc, m| t.combine(acc, t.factor_cost(m.get())));
    t.finish(acc)
}

/// Rational factors whose product is the target, with per-factor measures and
/// the total `t`-cost.
///
/// Unit factors are dropped; if that drops a `−1`, the sign moves onto the
/// first remaining factor. `±1` itself decomposes into the empty list.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalDecomposition {
    factors: Vec<Rational>,
    measures: Vec<LogValue>,
    total_cost: f64,
    t: TParam,
}

impl RationalDecomposition {
    pub fn from_factors(factors: Vec<Rational>, t: TParam) -> Self {
        let negative = factors.iter().filter(|f| f.is_negative()).count() % 2 == 1;
        let mut factors: Vec<Rational> = factors.into_iter().filter(|f| !f.is_unit()).map(|f| f.abs()).collect();
        if negative {
            if let Some(first) = factors.first_mut() {
                *first = -first.clone();
            }
        }
        let measures: Vec<LogValue> = factors.iter().map(mahler_rational).collect();
        let total_cost = tnorm(&measures, t);
        RationalDecomposition {
            factors,
            measures,
            total_cost,
            t,
        }
    }

    pub fn factors(&self) -> &[Rational] {
        &self.factors
    }

    pub fn measures(&self) -> &[LogValue] {
        &self.measures
    }

    /// The `t`-norm of [`measures`](Self::measures); for an optimal witness this
    /// is `M_t` of the target.
    pub fn total_cost(&self) -> f64 {
        self.total_cost
    }

    pub fn t(&self) -> TParam {
        self.t
    }

    pub fn product(&self) -> Rational {
        self.factors.iter().fold(Rational::one(), |acc, f| &acc * f)
    }
}

fn split(q: &Rational) -> Result<(Factorization, Factorization)> {
    Ok((factorize(q.numer())?, factorize(q.denom())?))
}

fn optimum(q: &Rational, num: &Factorization, den: &Factorization, t: TParam) -> Result<RationalDecomposition> {
    let pairs = search::optimize(num, den, t)?;
    let mut factors: Vec<Rational> = pairs
        .into_iter()
        .map(|(u, v)| Rational::from_ratio(u as i128, v).expect("factor parts are positive"))
        .collect();
    if q.is_negative() {
        if let Some(first) = factors.first_mut() {
            *first = -first.clone();
        }
    }
    Ok(RationalDecomposition::from_factors(factors, t))
}

/// Exact `M_t(q)` and a witness attaining it.
///
/// Witness factors are of the form `u/v` with `u | num(q)` and `v | den(q)`.
/// Among equal-cost witnesses (difference `<= 1e-12`) the one with fewest
/// factors wins, then the lexicographically smallest ascending factor list.
pub fn metric_mahler_rational(q: &Rational, t: TParam) -> Result<RationalDecomposition> {
    let (num, den) = split(q)?;
    optimum(q, &num, &den, t)
}

/// `M_t(q)` along a grid of `t` values, factoring `q` once.
pub fn mt_curve(q: &Rational, grid: &[TParam]) -> Result<Vec<(TParam, f64)>> {
    let (num, den) = split(q)?;
    grid.iter()
        .map(|&t| Ok((t, optimum(q, &num, &den, t)?.total_cost())))
        .collect()
}
