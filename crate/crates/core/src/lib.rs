//! Exact Mahler measures and t-metric Mahler measures.
//!
//! The crate works on three shapes of algebraic number: nonzero rationals,
//! quadratic irrationals given by their integer minimal polynomial, and real
//! surds `(m/n)^(1/k)`. On top of the classical measure it computes
//!
//! * `M_t(q)` for rational `q` together with an optimal rational witness
//!   ([`ratopt`]), plus an exhaustive oracle for cross-checking,
//! * the closed form of `M_t(D^(1/k))` for squarefree `D` and the decision of
//!   whether the infimum for `sqrt(D)` is attained inside `Q(sqrt(D))`
//!   ([`quadfield`]).
//!
//! Everything is `no_std` + `alloc`; IO, parsing front ends and parallel sweeps
//! live in the `mahler` companion crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
mod error;
pub mod measure;
pub mod quadfield;
pub mod ratopt;

pub use error::{Error, Result};

pub use arith::{Divisibility, Factorization, Natural, Rational};
pub use measure::{Algebraic, LogValue, QuadraticNumber, Root, Stability, Surd};
pub use quadfield::{AttainmentReport, Certificate, MixedDecomposition, SquarefreeD, Validation};
pub use ratopt::{NormPair, RationalDecomposition, TParam};
