use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use num_integer::{Integer, Roots};

use super::LogValue;
use crate::{Error, Rational, Result};

/// Which root of `ax² + bx + c` is meant: `(−b ± √Δ) / 2a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Plus,
    Minus,
}

impl Root {
    pub fn flip(self) -> Self {
        match self {
            Root::Plus => Root::Minus,
            Root::Minus => Root::Plus,
        }
    }
}

/// Position of both conjugates relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stability {
    StableOutside,
    StableOnCircle,
    StableInside,
    Unstable,
}

impl Stability {
    pub fn is_stable(self) -> bool {
        self != Stability::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stability::StableOutside => "stable_outside",
            Stability::StableOnCircle => "stable_on_circle",
            Stability::StableInside => "stable_inside",
            Stability::Unstable => "unstable",
        }
    }
}

/// A degree-2 algebraic number given by its minimal polynomial
/// `ax² + bx + c` over ℤ and a choice of root.
///
/// Invariants: `a > 0`, `c ≠ 0`, `gcd(a, b, c) = 1`, and `b² − 4ac` is not a
/// perfect square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: i64,
    b: i64,
    c: i64,
    root: Root,
}

fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = n.sqrt();
        r * r == n
    }
}

impl QuadraticNumber {
    pub fn new(a: i64, b: i64, c: i64, root: Root) -> Result<Self> {
        if a <= 0 {
            return Err(Error::InvalidQuadratic("leading coefficient must be positive"));
        }
        if c == 0 {
            return Err(Error::InvalidQuadratic("constant term is zero"));
        }
        if a.gcd(&b).gcd(&c) != 1 {
            return Err(Error::InvalidQuadratic("coefficients are not coprime"));
        }
        let q = QuadraticNumber { a, b, c, root };
        if is_square(q.discriminant()) {
            return Err(Error::InvalidQuadratic("discriminant is a perfect square"));
        }
        Ok(q)
    }

    /// Normalizes the sign of `(a, b, c)` so that `a > 0`, then validates.
    pub fn from_any_sign(a: i64, b: i64, c: i64, root: Root) -> Result<Self> {
        if a < 0 {
            // Negating the polynomial keeps the roots, so the labels stay put.
            Self::new(-a, -b, -c, root)
        } else {
            Self::new(a, b, c, root)
        }
    }

    pub fn coefficients(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    pub fn root(&self) -> Root {
        self.root
    }

    pub fn discriminant(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    pub fn is_real(&self) -> bool {
        self.discriminant() > 0
    }

    /// `ln a + Σ ln⁺|root|`, independent of the selected root.
    ///
    /// Real roots are taken as `q/a` and `c/q` with
    /// `q = −(b + sgn(b)·√Δ)/2`, and all moduli are handled in log space so the
    /// value stays accurate when the roots differ greatly in size.
    pub fn mahler(&self) -> LogValue {
        let ln_a = libm::log(self.a as f64);
        let ln_c = libm::log(self.c.unsigned_abs() as f64);
        let delta = self.discriminant();
        let (ln_r1, ln_r2) = if delta < 0 {
            // Complex pair, |root|² = c/a.
            let half = 0.5 * (ln_c - ln_a);
            (half, half)
        } else {
            let sq = libm::sqrt(delta as f64);
            let b = self.b as f64;
            let q = if self.b >= 0 { -(b + sq) / 2.0 } else { -(b - sq) / 2.0 };
            let ln_q = libm::log(q.abs());
            (ln_q - ln_a, ln_c - ln_q)
        };
        LogValue::new(ln_a + ln_r1.max(0.0) + ln_r2.max(0.0))
    }

    /// Exact classification from the coefficients alone:
    /// stable iff `|a + c| > |b|`, then `|a|` against `|c|`.
    pub fn stability(&self) -> Stability {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        if (a + c).abs() <= b.abs() {
            return Stability::Unstable;
        }
        match a.cmp(&c.abs()) {
            core::cmp::Ordering::Less => Stability::StableOutside,
            core::cmp::Ordering::Equal => Stability::StableOnCircle,
            core::cmp::Ordering::Greater => Stability::StableInside,
        }
    }

    /// Field norm `c/a`.
    pub fn norm(&self) -> Rational {
        Rational::from_ratio(self.c as i128, self.a as u128).expect("c is nonzero")
    }

    /// Field trace `−b/a`; `None` when it is zero.
    pub fn trace(&self) -> Option<Rational> {
        (self.b != 0).then(|| Rational::from_ratio(-(self.b as i128), self.a as u128).expect("b is nonzero"))
    }

    /// The multiplicative inverse, a root of `cx² + bx + a`.
    pub fn inverse(&self) -> Self {
        // 1 / ((−b ± √Δ)/2a) = (−b ∓ √Δ)/2c; with c < 0 the sign flip of the
        // whole polynomial swaps the labels back.
        let root = if self.c > 0 { self.root.flip() } else { self.root };
        Self::from_any_sign(self.c, self.b, self.a, root).expect("inverse of a valid quadratic is valid")
    }

    /// Floating approximation of the selected root as `(re, im)`.
    pub fn approx(&self) -> (f64, f64) {
        let delta = self.discriminant() as f64;
        let two_a = 2.0 * self.a as f64;
        let sign = match self.root {
            Root::Plus => 1.0,
            Root::Minus => -1.0,
        };
        if delta >= 0.0 {
            ((-(self.b as f64) + sign * libm::sqrt(delta)) / two_a, 0.0)
        } else {
            (-(self.b as f64) / two_a, sign * libm::sqrt(-delta) / two_a)
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.root {
            Root::Plus => '+',
            Root::Minus => '-',
        };
        write!(f, "{},{},{},{}", self.a, self.b, self.c, sign)
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    /// `a,b,c[,+|-]`; the root defaults to `+`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let mut parts = s.split(',');
        let mut coef = || -> Result<i64> { parts.next().ok_or_else(bad)?.trim().parse::<i64>().map_err(|_| bad()) };
        let (a, b, c) = (coef()?, coef()?, coef()?);
        let root = match parts.next().map(str::trim) {
            None | Some("+") => Root::Plus,
            Some("-") => Root::Minus,
            Some(_) => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        QuadraticNumber::new(a, b, c, root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(a: i64, b: i64, c: i64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, c, Root::Plus).unwrap()
    }

    #[test]
    fn mahler_examples() {
        let ln7 = libm::log(7.0);
        assert!((quad(1, -7, 7).mahler().get() - ln7).abs() < 1e-12);
        let m = quad(1, -3, -3).mahler().get();
        assert!(libm::log(3.0) < m && m < ln7, "{m}");
        assert_eq!(quad(1, 0, 1).mahler().get(), 0.0);
    }

    #[test]
    fn mahler_symmetries() {
        let a = quad(3, 5, -7);
        let b = quad(3, -5, -7);
        let c = QuadraticNumber::new(3, 5, -7, Root::Minus).unwrap();
        assert!((a.mahler().get() - b.mahler().get()).abs() < 1e-12);
        assert_eq!(a.mahler(), c.mahler());
    }

    #[test]
    fn stability_examples() {
        assert_eq!(quad(1, -7, 7).stability(), Stability::StableOutside);
        assert_eq!(quad(1, -3, -3).stability(), Stability::Unstable);
        assert_eq!(quad(1, 0, 1).stability(), Stability::StableOnCircle);
        assert_eq!(quad(7, -7, 1).stability(), Stability::StableInside);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(quad(1, -7, 7).norm().to_string(), "7");
        assert_eq!(quad(3, 0, -7).norm().to_string(), "-7/3");
        assert_eq!(quad(2, 0, -3).norm().to_string(), "-3/2");
    }

    #[test]
    fn invalid_inputs() {
        assert!(QuadraticNumber::new(0, 1, 1, Root::Plus).is_err());
        assert!(QuadraticNumber::new(-1, 1, 1, Root::Plus).is_err());
        assert!(QuadraticNumber::new(1, 1, 0, Root::Plus).is_err());
        assert!(QuadraticNumber::new(2, 4, 6, Root::Plus).is_err());
        // x² − 3x + 2 = (x − 1)(x − 2)
        assert!(QuadraticNumber::new(1, -3, 2, Root::Plus).is_err());
    }

    #[test]
    fn inverse_selects_matching_root() {
        for q in [
            QuadraticNumber::new(1, -3, -3, Root::Minus).unwrap(),
            QuadraticNumber::new(1, -3, -3, Root::Plus).unwrap(),
            QuadraticNumber::new(3, 0, -7, Root::Plus).unwrap(),
            QuadraticNumber::new(2, 5, 7, Root::Minus).unwrap(),
        ] {
            let (re, im) = q.approx();
            let (ire, iim) = q.inverse().approx();
            // (re + i im)(ire + i iim) = 1
            assert!((re * ire - im * iim - 1.0).abs() < 1e-12, "{q}");
            assert!((re * iim + im * ire).abs() < 1e-12, "{q}");
        }
    }

    #[test]
    fn parse_and_display() {
        let q: QuadraticNumber = "1,-7,7".parse().unwrap();
        assert_eq!(q, quad(1, -7, 7));
        let m: QuadraticNumber = "1,-3,-3,-".parse().unwrap();
        assert_eq!(m.root(), Root::Minus);
        assert_eq!(m.to_string(), "1,-3,-3,-");
        assert!("1,2".parse::<QuadraticNumber>().is_err());
        assert!("1,2,3,*".parse::<QuadraticNumber>().is_err());
    }
}
