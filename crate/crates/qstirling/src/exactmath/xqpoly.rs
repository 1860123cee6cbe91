use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::QPoly;

/// Polynomial in `x` whose coefficients are polynomials in `q`.
///
/// Index `k` holds the coefficient of `x^k`; the highest stored entry is a
/// nonzero [`QPoly`]. This is the carrier for generating-function slices such
/// as `sum_k S[n,k] x^k`.
///
/// ```
/// use qstirling::exactmath::{QPoly, XQPoly};
///
/// // x^2 + (q+1) x
/// let p = XQPoly::from_coeffs(vec![
///     QPoly::zero(),
///     QPoly::from_coeffs([1, 1]),
///     QPoly::one(),
/// ]);
/// assert_eq!(p.coeff(1), QPoly::from_coeffs([1, 1]));
/// assert_eq!(p.coeff(5), QPoly::zero());
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct XQPoly {
    coeffs: Vec<QPoly>,
}

impl XQPoly {
    pub fn zero() -> Self {
        XQPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XQPoly::constant(QPoly::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        XQPoly::from_coeffs(vec![QPoly::zero(), QPoly::one()])
    }

    /// A polynomial in `q` seen as a constant in `x`.
    pub fn constant(c: QPoly) -> Self {
        XQPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        XQPoly { coeffs }
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> QPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Ascending coefficients in `x`, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Degree in `x`, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply every coefficient by a polynomial in `q`.
    pub fn scale(&self, c: &QPoly) -> XQPoly {
        if c.is_zero() {
            return XQPoly::zero();
        }
        XQPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> XQPoly {
        let mut acc = XQPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &XQPoly {
    type Output = XQPoly;
    fn add(self, rhs: &XQPoly) -> XQPoly {
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        XQPoly::from_coeffs(coeffs)
    }
}

impl Sub for &XQPoly {
    type Output = XQPoly;
    fn sub(self, rhs: &XQPoly) -> XQPoly {
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        XQPoly::from_coeffs(coeffs)
    }
}

impl Mul for &XQPoly {
    type Output = XQPoly;
    fn mul(self, rhs: &XQPoly) -> XQPoly {
        if self.is_zero() || rhs.is_zero() {
            return XQPoly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        XQPoly::from_coeffs(coeffs)
    }
}

impl Neg for &XQPoly {
    type Output = XQPoly;
    fn neg(self) -> XQPoly {
        XQPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for XQPoly {
            type Output = XQPoly;
            fn $method(self, rhs: XQPoly) -> XQPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&XQPoly> for XQPoly {
            type Output = XQPoly;
            fn $method(self, rhs: &XQPoly) -> XQPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<XQPoly> for &XQPoly {
            type Output = XQPoly;
            fn $method(self, rhs: XQPoly) -> XQPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&XQPoly> for XQPoly {
    fn add_assign(&mut self, rhs: &XQPoly) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for XQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if c.is_one() {
                        // bare power of x
                    } else {
                        write!(f, "({c})*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coeff_beyond_degree_is_zero() {
        let p = XQPoly::x().pow(2);
        assert_eq!(p.coeff(5), QPoly::zero());
        assert_eq!(p.coeff(2), QPoly::one());
    }

    #[test]
    fn arithmetic_and_trim() {
        let x = XQPoly::x();
        let p = &x + &XQPoly::one(); // x + 1
        let sq = &p * &p;
        assert_eq!(sq.coeff(0), QPoly::one());
        assert_eq!(sq.coeff(1), QPoly::constant(2));
        assert_eq!(sq.coeff(2), QPoly::one());
        let diff = &sq - &sq;
        assert!(diff.is_zero());
        assert_eq!(diff.degree(), None);
    }

    #[test]
    fn display_form() {
        let p = XQPoly::from_coeffs(vec![
            QPoly::zero(),
            QPoly::from_coeffs([1, 1]),
            QPoly::one(),
        ]);
        assert_eq!(p.to_string(), "x^2 + (q + 1)*x");
    }

    #[test]
    fn serde_nested_arrays() {
        let p = XQPoly::from_coeffs(vec![QPoly::from_coeffs([6, 1]), QPoly::one()]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[["6","1"],["1"]]"#);
        let back: XQPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
