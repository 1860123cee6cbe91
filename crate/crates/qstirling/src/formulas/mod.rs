//! Closed formulas and the two cross-kind identities.
//!
//! Writing `[i,j]_q` for the Gaussian binomial, the scaled q-Stirling
//! numbers expand over the coefficient families of [`crate::qcomb`]:
//!
//! ```text
//! (1-q)^(n-k) S2[n,k] = sum_{j=0..k}   sum_{i=j..n-k} (-1)^i A(n,k,i,j)   q^C(j+1,2) [i,j]_q
//! (1-q)^(n-k) S1[n,k] = sum_{j=0..n-k} sum_{i=j..n-k} (-1)^j B(n,k,i,j)   q^C(j+1,2) [i,j]_q
//! ```
//!
//! with alternative forms shifting the family indices and the power of `q`.
//! Dividing by `(1-q)^(n-k)` is always exact; a nonzero remainder would
//! expose a convention bug, so it is surfaced as an error rather than
//! silently truncated.
//!
//! The two identities express each kind as an alternating binomial sum over
//! the other ([`s1_from_s2`], [`s2_from_s1`]); the [`proofsums`] submodule
//! carries the intermediate coefficient sums that reduce those identities to
//! binomial statements, and [`hyperg`] the terminating hypergeometric
//! summation lemmas used to evaluate them.

pub mod hyperg;
pub mod proofsums;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerate::{self, EnumError};
use crate::exactmath::{ExactMathError, QPoly};
use crate::paths;
use crate::qcomb::{binom_gen, coeff_a, coeff_b, narayana, qbinom};

/// Errors from formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("invalid arguments: need 0 <= k <= n, got n = {n}, k = {k}")]
    InvalidArgs { n: i64, k: i64 },
    #[error("the alternative second-kind formula requires n > 0")]
    AltNeedsPositiveN,
    #[error("index out of range for {what}")]
    OutOfRange { what: &'static str },
    #[error(transparent)]
    Exact(#[from] ExactMathError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// Where the identities draw their Stirling values from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Brute-force enumeration (bounded; the ground truth).
    Enumeration,
    /// The closed double sums of this module.
    Closed,
    /// Coefficient extraction from the path dynamic programming.
    Path,
}

fn check_args(n: i64, k: i64) -> Result<(), FormulaError> {
    if n < 0 || k < 0 || k > n {
        return Err(FormulaError::InvalidArgs { n, k });
    }
    Ok(())
}

/// The double sum for `(1-q)^(n-k) S2[n,k]`.
pub fn s2_scaled_closed(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    let mut acc = QPoly::zero();
    for j in 0..=k {
        for i in j..=n - k {
            let a = coeff_a(n, k, i, j);
            if a.is_zero() {
                continue;
            }
            let term = qbinom(i, j)
                .scale(&a)
                .shift_up((j * (j + 1) / 2) as usize);
            if i % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}

/// `S2[n,k]` from the closed double sum, after exact division by
/// `(1-q)^(n-k)`.
pub fn s2_closed(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    let scaled = s2_scaled_closed(n, k)?;
    Ok(scaled.divide_exact(&QPoly::one_minus_q().pow((n - k) as usize))?)
}

/// The alternative double sum for `(1-q)^(n-k) S2[n,k]`, valid for `n > 0`.
pub fn s2_scaled_closed_alt(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    if n == 0 {
        return Err(FormulaError::AltNeedsPositiveN);
    }
    let mut acc = QPoly::zero();
    for j in 0..=k - 1 {
        for i in j..=n - k {
            let a = coeff_a(n - 1, k - 1, i, j);
            if a.is_zero() {
                continue;
            }
            let term = qbinom(i, j)
                .scale(&a)
                .shift_up((i + j * (j - 1) / 2) as usize);
            if i % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}

/// `S2[n,k]` from the alternative sum (`n > 0`).
pub fn s2_closed_alt(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    let scaled = s2_scaled_closed_alt(n, k)?;
    Ok(scaled.divide_exact(&QPoly::one_minus_q().pow((n - k) as usize))?)
}

/// The double sum for `(1-q)^(n-k) S1[n,k]`.
pub fn s1_scaled_closed(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    let mut acc = QPoly::zero();
    for j in 0..=n - k {
        for i in j..=n - k {
            let b = coeff_b(n, k, i, j);
            if b.is_zero() {
                continue;
            }
            let term = qbinom(i, j)
                .scale(&b)
                .shift_up((j * (j + 1) / 2) as usize);
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}

/// `S1[n,k]` from the closed double sum.
pub fn s1_closed(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    let scaled = s1_scaled_closed(n, k)?;
    Ok(scaled.divide_exact(&QPoly::one_minus_q().pow((n - k) as usize))?)
}

/// The alternative double sum for `(1-q)^(n-k) S1[n,k]`, over the shifted
/// family `B(n+1, k+1, i, j)`.
pub fn s1_scaled_closed_alt(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    let mut acc = QPoly::zero();
    for j in 0..=n - k {
        for i in j..=n - k {
            let b = coeff_b(n + 1, k + 1, i, j);
            if b.is_zero() {
                continue;
            }
            let term = qbinom(i, j)
                .scale(&b)
                .shift_up((i + j * (j - 1) / 2) as usize);
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}

/// `S1[n,k]` from the alternative sum.
pub fn s1_closed_alt(n: i64, k: i64) -> Result<QPoly, FormulaError> {
    let scaled = s1_scaled_closed_alt(n, k)?;
    Ok(scaled.divide_exact(&QPoly::one_minus_q().pow((n - k) as usize))?)
}

fn s2_value(n: i64, k: i64, source: Source) -> Result<QPoly, FormulaError> {
    match source {
        Source::Enumeration => Ok(enumerate::s2_enum(n as usize, k as usize)?),
        Source::Closed => s2_closed(n, k),
        Source::Path => Ok(paths::s2_via_jfraction(n as usize).coeff(k as usize)),
    }
}

fn s1_value(n: i64, k: i64, source: Source) -> Result<QPoly, FormulaError> {
    match source {
        Source::Enumeration => Ok(enumerate::s1_enum(n as usize, k as usize)?),
        Source::Closed => s1_closed(n, k),
        Source::Path => Ok(paths::s1_via_tfraction(n as usize).coeff(k as usize)),
    }
}

/// The first identity: the alternating binomial sum over second-kind values
///
/// `S1[n,k] = (-1)^(n-k) sum_j (-1)^j C(n-1+j, n-k+j) C(2n-k, n-k-j) S2[n-k+j, j]`.
///
/// The prefactor binomials follow the generalized convention (`C(u,0) = 1`
/// for every `u`), which the degenerate cell `n = k = 0` requires.
pub fn s1_from_s2(n: i64, k: i64, source: Source) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    let mut acc = QPoly::zero();
    for j in 0..=n - k {
        let c = binom_gen(n - 1 + j, n - k + j) * binom_gen(2 * n - k, n - k - j);
        if c.is_zero() {
            continue;
        }
        let term = s2_value(n - k + j, j, source)?.scale(&c);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    if (n - k) % 2 != 0 {
        acc = -acc;
    }
    Ok(acc)
}

/// The second identity, symmetric to [`s1_from_s2`]:
///
/// `S2[n,k] = (-1)^(n-k) sum_j (-1)^j C(n-1+j, n-k+j) C(2n-k, n-k-j) S1[n-k+j, j]`.
pub fn s2_from_s1(n: i64, k: i64, source: Source) -> Result<QPoly, FormulaError> {
    check_args(n, k)?;
    let mut acc = QPoly::zero();
    for j in 0..=n - k {
        let c = binom_gen(n - 1 + j, n - k + j) * binom_gen(2 * n - k, n - k - j);
        if c.is_zero() {
            continue;
        }
        let term = s1_value(n - k + j, j, source)?.scale(&c);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    if (n - k) % 2 != 0 {
        acc = -acc;
    }
    Ok(acc)
}

/// The `q = 0` shadow of the identities on Narayana numbers:
/// `N(n,k) = (-1)^(n-k) sum_j (-1)^j C(n-1+j, n-k+j) C(2n-k, n-k-j) N(n-k+j, j)`.
pub fn narayana_identity_holds(n: u64, k: u64) -> bool {
    if k > n {
        return false;
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = BigInt::zero();
    for j in 0..=n - k {
        let c = binom_gen(n - 1 + j, n - k + j)
            * binom_gen(2 * n - k, n - k - j)
            * narayana((n - k + j) as u64, j as u64);
        if j % 2 == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    if (n - k) % 2 != 0 {
        acc = -acc;
    }
    acc == narayana(n as u64, k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QPoly;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn s2_closed_examples() {
        assert_eq!(s2_closed(2, 1).unwrap(), QPoly::one());
        assert_eq!(s2_closed(4, 2).unwrap(), p(&[6, 1]));
        for n in 0..=8 {
            assert_eq!(s2_closed(n, n).unwrap(), QPoly::one());
        }
        // the scaled sum itself: (1-q)^1 S2[2,1] = 1 - q
        assert_eq!(s2_scaled_closed(2, 1).unwrap(), QPoly::one_minus_q());
    }

    #[test]
    fn s2_closed_alt_examples() {
        assert_eq!(s2_closed_alt(4, 2).unwrap(), p(&[6, 1]));
        assert_eq!(s2_closed_alt(1, 1).unwrap(), QPoly::one());
        assert_eq!(s2_closed_alt(5, 3).unwrap(), p(&[20, 5]));
        assert_eq!(s2_closed_alt(0, 0), Err(FormulaError::AltNeedsPositiveN));
    }

    #[test]
    fn s1_closed_examples() {
        assert_eq!(s1_closed(3, 1).unwrap(), p(&[1, 1]));
        assert_eq!(s1_closed(4, 1).unwrap(), p(&[1, 2, 2, 1]));
        for n in 0..=8 {
            assert_eq!(s1_closed(n, n).unwrap(), QPoly::one());
        }
        assert_eq!(s1_closed(1, 0).unwrap(), QPoly::zero());
    }

    #[test]
    fn s1_closed_alt_examples() {
        assert_eq!(s1_closed_alt(3, 1).unwrap(), p(&[1, 1]));
        assert_eq!(s1_closed_alt(5, 2).unwrap(), p(&[10, 18, 15, 7]));
        for n in 0..=8 {
            assert_eq!(s1_closed_alt(n, n).unwrap(), QPoly::one());
        }
        assert_eq!(s1_closed_alt(0, 0).unwrap(), QPoly::one());
    }

    #[test]
    fn identity_first_examples() {
        assert_eq!(s1_from_s2(3, 1, Source::Closed).unwrap(), p(&[1, 1]));
        assert_eq!(s1_from_s2(4, 1, Source::Closed).unwrap(), p(&[1, 2, 2, 1]));
        for n in 0..=6 {
            assert_eq!(s1_from_s2(n, n, Source::Closed).unwrap(), QPoly::one());
        }
        assert_eq!(s1_from_s2(0, 0, Source::Closed).unwrap(), QPoly::one());
    }

    #[test]
    fn identity_second_examples() {
        assert_eq!(s2_from_s1(3, 2, Source::Closed).unwrap(), p(&[3]));
        assert_eq!(s2_from_s1(4, 2, Source::Closed).unwrap(), p(&[6, 1]));
        for n in 0..=6 {
            assert_eq!(s2_from_s1(n, n, Source::Closed).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn identities_with_enumeration_source() {
        assert_eq!(s1_from_s2(3, 1, Source::Enumeration).unwrap(), p(&[1, 1]));
        assert_eq!(s2_from_s1(3, 2, Source::Enumeration).unwrap(), p(&[3]));
        // bound propagation: (9,1) needs S2 up to first argument 16
        assert!(matches!(
            s1_from_s2(9, 1, Source::Enumeration),
            Err(FormulaError::Enumeration(EnumError::BoundExceeded { .. }))
        ));
    }

    #[test]
    fn narayana_identity_examples() {
        assert!(narayana_identity_holds(4, 2));
        assert!(narayana_identity_holds(5, 3));
        for n in 0..=8 {
            assert!(narayana_identity_holds(n, n));
        }
        assert!(narayana_identity_holds(0, 0));
    }

    #[test]
    fn invalid_args_rejected() {
        assert!(s2_closed(3, 4).is_err());
        assert!(s1_closed(-1, 0).is_err());
        assert!(s1_from_s2(2, 3, Source::Closed).is_err());
    }
}
