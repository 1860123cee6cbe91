use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactMathError;

/// Polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored ascending: index `d` holds the coefficient of
/// `q^d`. Trailing zeros are trimmed, so the zero polynomial is the empty
/// coefficient vector and the last stored coefficient is always nonzero.
///
/// `QPoly` is the value type of every q-analog in the crate: a q-Stirling
/// number, a q-binomial, a Motzkin moment are all `QPoly`s.
///
/// ```
/// use qstirling::exactmath::QPoly;
///
/// let p = QPoly::from_coeffs([6, 1]); // 6 + q, ascending
/// assert_eq!(p.to_string(), "q + 6");
/// assert_eq!(p.degree(), Some(1));
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    /// The polynomial `1 - q`.
    pub fn one_minus_q() -> Self {
        QPoly::from_coeffs([1, -1])
    }

    /// Constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_big_coeffs(vec![c.into()])
    }

    /// The monomial `c * q^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        QPoly::from_big_coeffs(coeffs.into_iter().map(Into::into).collect())
    }

    /// Build from ascending `BigInt` coefficients, trimming trailing zeros.
    pub fn from_big_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exact evaluation at an integer point, by Horner's rule.
    pub fn eval_int(&self, q0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Returns [`ExactMathError::NonzeroRemainder`] when the division is not
    /// exact over the integers, and [`ExactMathError::DivisionByZero`] for a
    /// zero divisor.
    pub fn divide_exact(&self, divisor: &QPoly) -> Result<QPoly, ExactMathError> {
        if divisor.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return Err(ExactMathError::NonzeroRemainder);
        }
        let lead = &divisor.coeffs[m - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for d in (0..=n - m).rev() {
            let top = rem[d + m - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(ExactMathError::NonzeroRemainder);
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let prod = b * &c;
                rem[d + i] -= prod;
            }
            quot[d] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactMathError::NonzeroRemainder);
        }
        Ok(QPoly::from_big_coeffs(quot))
    }

    /// Render for a LaTeX table cell: descending powers, juxtaposed
    /// coefficients, braced exponents (`q^{3} + 2q^{2} + 2q + 1`).
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if d == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    if !latex {
                        out.push('*');
                    }
                }
                if d == 1 {
                    out.push('q');
                } else if latex {
                    out.push_str(&format!("q^{{{d}}}"));
                } else {
                    out.push_str(&format!("q^{d}"));
                }
            }
        }
        out
    }
}

/// Canonical text form: descending powers with explicit `*`, e.g.
/// `q^3 + 2*q^2 + 2*q + 1`; the zero polynomial renders as `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_big_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_big_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_big_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

/// Wire format: array of decimal-string coefficients, ascending. Strings
/// rather than numbers so 64-bit-float consumers cannot truncate them.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(BigInt::to_string))
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c = s
                .parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))?;
            coeffs.push(c);
        }
        Ok(QPoly::from_big_coeffs(coeffs))
    }
}
