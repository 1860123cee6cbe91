//! Exact polynomial arithmetic in `q`, and in `x` over `q`.
//!
//! Every quantity in this crate is an exact object: a [`QPoly`] (polynomial in
//! `q` with arbitrary-precision integer coefficients), an [`XQPoly`]
//! (polynomial in `x` whose coefficients are `QPoly`), or a [`QRational`]
//! (arbitrary-precision rational, used by the hypergeometric evaluator).
//! There is no floating point anywhere.

mod qpoly;
mod xqpoly;

pub use qpoly::QPoly;
pub use xqpoly::XQPoly;

/// Exact rational number: reduced to lowest terms, denominator positive.
pub type QRational = num_rational::BigRational;

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactMathError {
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// `divide_exact` was called on a pair that does not divide exactly.
    /// Every formula in this crate guarantees exact divisibility, so this
    /// signals a bug in a formula or a convention.
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
}
