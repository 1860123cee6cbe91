//! Terminating hypergeometric series at unit argument, evaluated in exact
//! rational arithmetic, and the three summation lemmas the proof-step sums
//! lean on: Pfaff-Saalschütz, its Gauss-style limit, and the contiguity
//! relation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::QRational;

/// Errors from hypergeometric evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypergError {
    /// Needs `r+1` upper and `r` lower parameters with `r >= 1`.
    #[error("series shape invalid: {0}")]
    Shape(String),
    /// No upper parameter is a nonpositive integer.
    #[error("series does not terminate: no nonpositive-integer upper parameter")]
    NoTermination,
    /// A lower parameter hits zero within the terminating range.
    #[error("lower parameter {0} is a pole within the terminating range")]
    PoleInRange(String),
    /// The right-hand side of a summation lemma has a vanishing denominator.
    #[error("lemma right-hand side denominator vanishes")]
    DenominatorVanishes,
}

/// A terminating `(r+1)F_r` series at unit argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSeries {
    upper: Vec<QRational>,
    lower: Vec<QRational>,
    /// Terminating index: the least `m` with `-m` among the upper parameters.
    m: u64,
}

/// `Some(-a)` when `a` is a nonpositive integer.
fn as_nonpositive_integer(a: &QRational) -> Option<u64> {
    if a.is_integer() && !a.numer().is_positive() {
        Some((-a.numer().clone()).try_into().expect("checked sign"))
    } else {
        None
    }
}

impl HypSeries {
    /// Validate the shape (`r+1` upper, `r` lower, `r >= 1`) and find the
    /// termination witness.
    pub fn new(upper: Vec<QRational>, lower: Vec<QRational>) -> Result<Self, HypergError> {
        if lower.is_empty() || upper.len() != lower.len() + 1 {
            return Err(HypergError::Shape(format!(
                "{} upper and {} lower parameters",
                upper.len(),
                lower.len()
            )));
        }
        let m = upper
            .iter()
            .filter_map(as_nonpositive_integer)
            .min()
            .ok_or(HypergError::NoTermination)?;
        Ok(HypSeries { upper, lower, m })
    }

    pub fn upper(&self) -> &[QRational] {
        &self.upper
    }

    pub fn lower(&self) -> &[QRational] {
        &self.lower
    }

    /// The number of terms past the leading 1.
    pub fn terminating_index(&self) -> u64 {
        self.m
    }
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`.
pub fn pochhammer(a: &QRational, m: u64) -> QRational {
    let mut acc = QRational::one();
    let mut f = a.clone();
    for _ in 0..m {
        acc *= &f;
        f += QRational::one();
    }
    acc
}

/// Exact value of a terminating series: `sum_{t=0..m} prod (alpha)_t /
/// (prod (beta)_t * t!)`, by term-ratio accumulation.
///
/// Fails with [`HypergError::PoleInRange`] if a lower parameter is an
/// integer in `[-(m-1), 0]`, which would zero a denominator before the
/// series terminates.
pub fn pfq_eval(s: &HypSeries) -> Result<QRational, HypergError> {
    let m = s.m;
    for b in &s.lower {
        if let Some(p) = as_nonpositive_integer(b) {
            if m > 0 && p <= m - 1 {
                return Err(HypergError::PoleInRange(b.to_string()));
            }
        }
    }
    let mut term = QRational::one();
    let mut sum = QRational::one();
    for t in 0..m {
        let t_rat = QRational::from_integer(BigInt::from(t));
        for a in &s.upper {
            term *= a + &t_rat;
        }
        for b in &s.lower {
            term /= b + &t_rat;
        }
        term /= &t_rat + QRational::one();
        sum += &term;
    }
    Ok(sum)
}

/// One of the three summation lemmas, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummationLemma {
    /// Pfaff-Saalschütz: `3F2(-m, a, b; c, a+b-c-m+1 | 1)
    /// = (c-a)_m (c-b)_m / ((c)_m (c-a-b)_m)`.
    Saalschutz {
        m: u64,
        a: QRational,
        b: QRational,
        c: QRational,
    },
    /// The `b -> infinity` limit: `2F1(-m, a; c | 1) = (c-a)_m / (c)_m`.
    Gauss { m: u64, a: QRational, c: QRational },
    /// Contiguity for a terminating `4F3` (and in general any `(r+1)Fr`):
    /// `(a3-a4) F = a3 F(a3+1) - a4 F(a4+1)` with all other parameters
    /// fixed; `a1 = -m` supplies termination throughout.
    Contiguity {
        m: u64,
        a2: QRational,
        a3: QRational,
        a4: QRational,
        b1: QRational,
        b2: QRational,
        b3: QRational,
    },
}

/// Evaluate both sides of a summation lemma exactly and compare.
pub fn summation_lemma_check(lemma: &SummationLemma) -> Result<bool, HypergError> {
    match lemma {
        SummationLemma::Saalschutz { m, a, b, c } => {
            let minus_m = QRational::from_integer(BigInt::from(-(*m as i64)));
            let second_lower =
                a + b - c - QRational::from_integer(BigInt::from(*m as i64)) + QRational::one();
            let lhs = pfq_eval(&HypSeries::new(
                vec![minus_m, a.clone(), b.clone()],
                vec![c.clone(), second_lower],
            )?)?;
            let den = pochhammer(c, *m) * pochhammer(&(c - a - b), *m);
            if den.is_zero() {
                return Err(HypergError::DenominatorVanishes);
            }
            let num = pochhammer(&(c - a), *m) * pochhammer(&(c - b), *m);
            Ok(lhs == num / den)
        }
        SummationLemma::Gauss { m, a, c } => {
            let minus_m = QRational::from_integer(BigInt::from(-(*m as i64)));
            let lhs = pfq_eval(&HypSeries::new(
                vec![minus_m, a.clone()],
                vec![c.clone()],
            )?)?;
            let den = pochhammer(c, *m);
            if den.is_zero() {
                return Err(HypergError::DenominatorVanishes);
            }
            Ok(lhs == pochhammer(&(c - a), *m) / den)
        }
        SummationLemma::Contiguity {
            m,
            a2,
            a3,
            a4,
            b1,
            b2,
            b3,
        } => {
            let minus_m = QRational::from_integer(BigInt::from(-(*m as i64)));
            let lower = vec![b1.clone(), b2.clone(), b3.clone()];
            let eval = |x3: QRational, x4: QRational| -> Result<QRational, HypergError> {
                pfq_eval(&HypSeries::new(
                    vec![minus_m.clone(), a2.clone(), x3, x4],
                    lower.clone(),
                )?)
            };
            let base = eval(a3.clone(), a4.clone())?;
            let shift3 = eval(a3 + QRational::one(), a4.clone())?;
            let shift4 = eval(a3.clone(), a4 + QRational::one())?;
            Ok((a3 - a4) * base == a3 * shift3 - a4 * shift4)
        }
    }
}
