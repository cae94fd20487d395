use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{factorize_u128, Natural};
use crate::measure::{Algebraic, QuadraticNumber, Root};
use crate::{Error, Rational, Result};

/// A squarefree integer `D >= 2` with its primes in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeD {
    value: u64,
    primes: Vec<u64>,
}

impl SquarefreeD {
    pub fn new(value: u64) -> Result<Self> {
        if value < 2 {
            return Err(Error::NotSquarefree);
        }
        let f = factorize_u128(value as u128)?;
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let primes = f.primes().rev().map(|p| p as u64).collect();
        Ok(SquarefreeD { value, primes })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `p_1 > p_2 > … > p_L`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn largest_prime(&self) -> u64 {
        self.primes[0]
    }

    /// `p_2 ⋯ p_L`.
    pub fn cofactor(&self) -> u64 {
        self.value / self.largest_prime()
    }

    /// `D < p_1²`, equivalently `p_2 ⋯ p_L < p_1`.
    pub fn below_largest_square(&self) -> bool {
        (self.value as u128) < (self.largest_prime() as u128).pow(2)
    }
}

impl fmt::Display for SquarefreeD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FromStr for SquarefreeD {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n: Natural = s.parse()?;
        let v = n.to_u128().and_then(|v| u64::try_from(v).ok()).ok_or(Error::TooLarge("D"))?;
        SquarefreeD::new(v)
    }
}

/// `(x + y·√D) / den` with integer `x`, `y` and `den > 0`, not reduced.
#[derive(Clone, Debug)]
pub(crate) struct FieldElement {
    x: BigInt,
    y: BigInt,
    den: BigInt,
}

fn signed(q: &Rational) -> (BigInt, BigInt) {
    let num = BigInt::from(q.numer().as_biguint().clone());
    let num = if q.is_negative() { -num } else { num };
    (num, BigInt::from(q.denom().as_biguint().clone()))
}

impl FieldElement {
    pub(crate) fn one() -> Self {
        FieldElement {
            x: BigInt::one(),
            y: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub(crate) fn rational(q: &Rational) -> Self {
        let (x, den) = signed(q);
        FieldElement { x, y: BigInt::zero(), den }
    }

    pub(crate) fn sqrt_d() -> Self {
        FieldElement {
            x: BigInt::zero(),
            y: BigInt::one(),
            den: BigInt::one(),
        }
    }

    /// Embeds `α` into `ℚ(√D)`; `None` when `α` is not in the field.
    pub(crate) fn embed(alpha: &Algebraic, d: u64) -> Option<Self> {
        match alpha {
            Algebraic::Rational(q) => Some(Self::rational(q)),
            Algebraic::Quadratic(q) => Self::quadratic(q, d),
            Algebraic::Surd(s) => {
                let (r, degree) = s.reduced();
                match degree {
                    1 => Some(Self::rational(&r)),
                    // √(m/n) = √(m·n·D) · √D / (n·D) when m·n·D is a square.
                    2 => {
                        let mnd = r.numer().as_biguint() * r.denom().as_biguint() * BigUint::from(d);
                        let root = mnd.sqrt();
                        if &root * &root != mnd {
                            return None;
                        }
                        Some(FieldElement {
                            x: BigInt::zero(),
                            y: BigInt::from(root),
                            den: BigInt::from(r.denom().as_biguint() * BigUint::from(d)),
                        })
                    }
                    _ => None,
                }
            }
        }
    }

    /// `(−b ± v√D) / 2a` where `Δ = D·v²`.
    fn quadratic(q: &QuadraticNumber, d: u64) -> Option<Self> {
        let delta = q.discriminant();
        if delta <= 0 || delta % d as i128 != 0 {
            return None;
        }
        let v2 = delta / d as i128;
        let v = num_integer::Roots::sqrt(&v2);
        if v * v != v2 {
            return None;
        }
        let (a, b, _) = q.coefficients();
        let v = match q.root() {
            Root::Plus => v,
            Root::Minus => -v,
        };
        Some(FieldElement {
            x: BigInt::from(-b),
            y: BigInt::from(v),
            den: BigInt::from(2 * a as i128),
        })
    }

    pub(crate) fn mul(&self, other: &Self, d: u64) -> Self {
        let d = BigInt::from(d);
        FieldElement {
            x: &self.x * &other.x + &self.y * &other.y * d,
            y: &self.x * &other.y + &self.y * &other.x,
            den: &self.den * &other.den,
        }
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        &self.x * &other.den == &other.x * &self.den && &self.y * &other.den == &other.y * &self.den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn squarefree_construction() {
        let d = SquarefreeD::new(42).unwrap();
        assert_eq!(d.primes(), &[7, 3, 2]);
        assert_eq!(d.cofactor(), 6);
        assert!(d.below_largest_square());
        assert!(!SquarefreeD::new(30).unwrap().below_largest_square());
        assert_eq!(SquarefreeD::new(12), Err(Error::NotSquarefree));
        assert_eq!(SquarefreeD::new(1), Err(Error::NotSquarefree));
        assert!("abc".parse::<SquarefreeD>().is_err());
    }

    #[test]
    fn sqrt21_product_identity() {
        let d = 21;
        let factors = vec![
            Algebraic::Rational("-1".parse().unwrap()),
            Algebraic::Quadratic("1,-7,7,+".parse().unwrap()),
            Algebraic::Quadratic("1,-3,-3,-".parse().unwrap()),
        ];
        let product = factors
            .iter()
            .map(|f| FieldElement::embed(f, d).unwrap())
            .fold(FieldElement::one(), |acc, f| acc.mul(&f, d));
        assert!(product.same_as(&FieldElement::sqrt_d()));
    }

    #[test]
    fn surds_embed_only_when_in_the_field() {
        let s = |t: &str| Algebraic::Surd(t.parse().unwrap());
        assert!(FieldElement::embed(&s("(7/3)^(1/2)"), 21).is_some());
        assert!(FieldElement::embed(&s("2^(1/2)"), 21).is_none());
        assert!(FieldElement::embed(&s("2^(1/3)"), 2).is_none());
        let root = FieldElement::embed(&s("(7/3)^(1/2)"), 21).unwrap();
        let three = FieldElement::rational(&"3".parse().unwrap());
        assert!(root.mul(&three, 21).same_as(&FieldElement::sqrt_d()));
    }
}
