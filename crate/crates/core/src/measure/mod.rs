//! Classical (logarithmic) Mahler measure and Weil height for rationals,
//! quadratic irrationals and surds, plus norms and quadratic stability.

mod quadratic;
mod surd;

use core::fmt;

pub use quadratic::{QuadraticNumber, Root, Stability};
pub use surd::{BinomialPolynomial, Surd};

use crate::Rational;

/// A nonnegative natural-log quantity such as `M(α)` or `h(α)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct LogValue(f64);

impl LogValue {
    pub const ZERO: LogValue = LogValue(0.0);

    /// Clamps rounding noise below zero; measures are never negative.
    pub fn new(v: f64) -> Self {
        debug_assert!(v > -1e-9, "negative log value {v}");
        LogValue(v.max(0.0))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `log max(|num|, den)` of a reduced nonzero rational.
pub fn mahler_rational(q: &Rational) -> LogValue {
    LogValue::new(q.numer().max(q.denom()).ln())
}

/// One of the algebraic-number shapes the crate handles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algebraic {
    Rational(Rational),
    Quadratic(QuadraticNumber),
    Surd(Surd),
}

impl Algebraic {
    pub fn mahler(&self) -> LogValue {
        match self {
            Algebraic::Rational(q) => mahler_rational(q),
            Algebraic::Quadratic(q) => q.mahler(),
            Algebraic::Surd(s) => s.mahler(),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Algebraic::Rational(_) => 1,
            Algebraic::Quadratic(_) => 2,
            Algebraic::Surd(s) => s.degree(),
        }
    }

    /// Norm from `ℚ(α)` down to ℚ.
    pub fn norm(&self) -> Rational {
        match self {
            Algebraic::Rational(q) => q.clone(),
            Algebraic::Quadratic(q) => q.norm(),
            Algebraic::Surd(s) => s.norm(),
        }
    }
}

impl From<Rational> for Algebraic {
    fn from(q: Rational) -> Self {
        Algebraic::Rational(q)
    }
}

impl From<QuadraticNumber> for Algebraic {
    fn from(q: QuadraticNumber) -> Self {
        Algebraic::Quadratic(q)
    }
}

impl From<Surd> for Algebraic {
    fn from(s: Surd) -> Self {
        Algebraic::Surd(s)
    }
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(q) => q.fmt(f),
            Algebraic::Quadratic(q) => write!(f, "root({q})"),
            Algebraic::Surd(s) => s.fmt(f),
        }
    }
}

/// Weil height `M(α) / deg α`.
pub fn weil_height(x: &Algebraic) -> LogValue {
    LogValue::new(x.mahler().get() / x.degree() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn close(a: LogValue, b: f64) -> bool {
        (a.get() - b).abs() < 1e-12
    }

    #[test]
    fn mahler_rational_examples() {
        assert!(close(mahler_rational(&q("6")), libm::log(6.0)));
        assert!(close(mahler_rational(&q("-7/6")), libm::log(7.0)));
        assert_eq!(mahler_rational(&q("1")), LogValue::ZERO);
        assert_eq!(mahler_rational(&q("-1")), LogValue::ZERO);
    }

    #[test]
    fn weil_height_examples() {
        assert!(close(weil_height(&q("6").into()), libm::log(6.0)));
        let s: Surd = "2^(1/2)".parse().unwrap();
        assert!(close(weil_height(&s.into()), libm::log(2.0) / 2.0));
        let a = QuadraticNumber::new(1, -7, 7, Root::Plus).unwrap();
        assert!(close(weil_height(&a.into()), libm::log(7.0) / 2.0));
    }

    #[test]
    fn doubling_index_halves_height() {
        for d in [2u64, 6, 30, 105] {
            for k in [1u32, 2, 3, 5] {
                let s1 = Surd::new(Rational::from_integer(d as i128).unwrap(), k).unwrap();
                let s2 = Surd::new(Rational::from_integer(d as i128).unwrap(), 2 * k).unwrap();
                assert_eq!(s2.degree(), 2 * s1.degree());
                let h1 = weil_height(&s1.into()).get();
                let h2 = weil_height(&s2.into()).get();
                assert!((h1 - 2.0 * h2).abs() < 1e-12);
            }
        }
    }
}
