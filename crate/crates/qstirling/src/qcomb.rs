//! Combinatorial number primitives: extended binomials, q-binomials,
//! Narayana numbers, classical Stirling numbers, and the two four-parameter
//! coefficient families feeding the closed formulas.
//!
//! # Binomial conventions
//!
//! [`binom_ext`] extends `C(u,v)` to all integer pairs:
//!
//! - `C(-1,-1) = C(-2,-2) = 1`,
//! - otherwise `0` whenever `v < 0` or `u < v`,
//! - otherwise the factorial formula.
//!
//! The two special diagonal pairs and the `v < 0` rule are the conventions
//! the coefficient families are stated under; the `u < 0 <= v` case (e.g.
//! `C(-1,0) = 0`) is forced by requiring the difference and factored forms of
//! [`coeff_b`] to agree at `(n,1,n-1,j)`, and is pinned down by the
//! `diff = fact` verification rather than guessed silently.
//!
//! [`binom_gen`] is the standard generalized convention (`C(u,0) = 1` for
//! every integer `u`, zero for `v < 0`). The alternating identity sums in
//! [`crate::formulas`] use it for their binomial prefactors, where the
//! degenerate cell `n = k = 0` requires `C(-1,0) = 1`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::QPoly;

/// Which kind of Stirling number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// First kind: permutations counted by right-to-left maxima.
    First,
    /// Second kind: set partitions counted by blocks.
    Second,
}

impl Kind {
    pub fn as_number(self) -> u8 {
        match self {
            Kind::First => 1,
            Kind::Second => 2,
        }
    }
}

/// Plain binomial coefficient for nonnegative arguments.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Extended binomial under the coefficient-family conventions (see the
/// module docs): `1` at `(-1,-1)` and `(-2,-2)`, else `0` for `v < 0` or
/// `u < v`, else `u!/(v!(u-v)!)`.
pub fn binom_ext(u: i64, v: i64) -> BigInt {
    if (u == -1 && v == -1) || (u == -2 && v == -2) {
        return BigInt::one();
    }
    if v < 0 || u < v {
        return BigInt::zero();
    }
    binom(u as u64, v as u64)
}

/// Generalized binomial: `0` for `v < 0`, otherwise the falling-factorial
/// formula `u(u-1)...(u-v+1)/v!`, so `C(u,0) = 1` for every integer `u`.
pub fn binom_gen(u: i64, v: i64) -> BigInt {
    if v < 0 {
        return BigInt::zero();
    }
    if u >= 0 {
        return binom_ext(u, v);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..v {
        num *= BigInt::from(u - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// The q-integer `[h]_q = 1 + q + ... + q^{h-1}`.
pub fn q_int(h: usize) -> QPoly {
    QPoly::from_big_coeffs(vec![BigInt::one(); h])
}

/// Gaussian binomial coefficient as a polynomial in `q`.
///
/// Zero when `k < 0` or `k > n`; otherwise computed by the recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]` from `[0,0] = 1`.
///
/// ```
/// use qstirling::qcomb::qbinom;
/// assert_eq!(qbinom(3, 1).to_string(), "q^2 + q + 1");
/// ```
pub fn qbinom(n: i64, k: i64) -> QPoly {
    if k < 0 || k > n || n < 0 {
        return QPoly::zero();
    }
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, k)) {
        return hit.clone();
    }
    // Row-by-row Pascal walk; fills only the single target column's supports.
    let mut row = vec![QPoly::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m.min(k as usize) {
            let left = if j >= 1 { row.get(j - 1) } else { None };
            let right = row.get(j);
            let mut val = left.cloned().unwrap_or_else(QPoly::zero);
            if let Some(r) = right {
                val += &r.shift_up(j);
            }
            next.push(val);
        }
        row = next;
    }
    let result = row.get(k as usize).cloned().unwrap_or_else(QPoly::zero);
    cache
        .lock()
        .unwrap()
        .insert((n, k), result.clone());
    result
}

/// Narayana number `N(n,k) = (1/n) C(n,k-1) C(n,k)` for `1 <= k <= n`,
/// extended by `N(0,0) = 1`, `N(n,0) = 0` for `n >= 1`, and `0` for `k > n`.
pub fn narayana(n: u64, k: u64) -> BigInt {
    if n == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if k == 0 || k > n {
        return BigInt::zero();
    }
    let prod = binom(n, k - 1) * binom(n, k);
    let (q, r) = num_integer::div_rem(prod, BigInt::from(n));
    assert!(r.is_zero(), "Narayana product not divisible by n");
    q
}

/// Classical (unsigned) Stirling numbers.
///
/// The second kind is evaluated by the exact alternating formula
/// `S2(n,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n` with the division checked;
/// the first kind by the recurrence `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
pub fn stirling_classical(kind: Kind, n: u64, k: u64) -> BigInt {
    match kind {
        Kind::First => {
            if k > n {
                return BigInt::zero();
            }
            let n = n as usize;
            let k = k as usize;
            let mut row = vec![BigInt::one()];
            for m in 1..=n {
                let mut next = vec![BigInt::zero(); m + 1];
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        next[j + 1] += v;
                        next[j] += v * BigInt::from(m - 1);
                    }
                }
                row = next;
            }
            row[k].clone()
        }
        Kind::Second => {
            if k > n {
                return BigInt::zero();
            }
            let mut sum = BigInt::zero();
            for j in 0..=k {
                let term = binom(k, j) * BigInt::from(j).pow(n as u32);
                if (k - j) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            let mut kfact = BigInt::one();
            for t in 2..=k {
                kfact *= BigInt::from(t);
            }
            let (q, r) = num_integer::div_rem(sum, kfact);
            assert!(r.is_zero(), "Stirling-2 alternating sum not divisible by k!");
            q
        }
    }
}

/// First coefficient family, difference form:
/// `A(n,k,i,j) = C(n,k+i) C(n,k-j) - C(n,k+i+1) C(n,k-j-1)`.
///
/// Total over all integer inputs via [`binom_ext`]; in the canonical range
/// `0 <= j <= i <= n-k` it equals [`coeff_a_factored`].
pub fn coeff_a(n: i64, k: i64, i: i64, j: i64) -> BigInt {
    binom_ext(n, k + i) * binom_ext(n, k - j) - binom_ext(n, k + i + 1) * binom_ext(n, k - j - 1)
}

/// Factored form of the first family:
/// `A(n,k,i,j) = (i+j+1)/(n+1) * C(n+1,k-j) * C(n+1,k+i+1)`.
///
/// Verification oracle for [`coeff_a`]; panics if the division is not exact.
pub fn coeff_a_factored(n: i64, k: i64, i: i64, j: i64) -> BigInt {
    let prod = BigInt::from(i + j + 1) * binom_ext(n + 1, k - j) * binom_ext(n + 1, k + i + 1);
    let (q, r) = num_integer::div_rem(prod, BigInt::from(n + 1));
    assert!(r.is_zero(), "factored A not divisible by n+1");
    q
}

/// Second coefficient family, difference form:
/// `B(n,k,i,j) = C(n+j-1,k-1) C(n-i-1,k-1) - C(n+j,k-1) C(n-i-2,k-1)`.
pub fn coeff_b(n: i64, k: i64, i: i64, j: i64) -> BigInt {
    binom_ext(n + j - 1, k - 1) * binom_ext(n - i - 1, k - 1)
        - binom_ext(n + j, k - 1) * binom_ext(n - i - 2, k - 1)
}

/// Factored form of the second family:
/// `B(n,k,i,j) = (i+j+1)/(n+j) * C(n+j,k-1) * C(n-i-2,k-2)`.
///
/// Defined for `n + j >= 1` (the lone canonical cell `(0,0,0,0)` is
/// indeterminate in this form); panics if the division is not exact.
pub fn coeff_b_factored(n: i64, k: i64, i: i64, j: i64) -> BigInt {
    assert!(n + j >= 1, "factored B needs n + j >= 1");
    let prod = BigInt::from(i + j + 1) * binom_ext(n + j, k - 1) * binom_ext(n - i - 2, k - 2);
    let (q, r) = num_integer::div_rem(prod, BigInt::from(n + j));
    assert!(r.is_zero(), "factored B not divisible by n+j");
    q
}

/// Check the inverse relation between the two triangular Stirling matrices
/// of size `n x n` (indices `0..n`).
///
/// The alternating sign sits on exactly one of the triangles: with
/// `A[i][j] = (-1)^(i-j) S1(i,j)` and `B[i][j] = S2(i,j)`, both `A B` and
/// `B A` are the identity. (Signing both triangles would cancel the signs
/// inside the products and break the relation.)
pub fn signed_matrix_inverse_check(n: usize) -> bool {
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < j {
                        BigInt::zero()
                    } else {
                        let s = stirling_classical(Kind::First, i as u64, j as u64);
                        if (i - j) % 2 == 0 {
                            s
                        } else {
                            -s
                        }
                    }
                })
                .collect()
        })
        .collect();
    let b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < j {
                        BigInt::zero()
                    } else {
                        stirling_classical(Kind::Second, i as u64, j as u64)
                    }
                })
                .collect()
        })
        .collect();
    let is_identity = |m: &[Vec<BigInt>]| {
        m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                let expect = if i == j { BigInt::one() } else { BigInt::zero() };
                *v == expect
            })
        })
    };
    let mul = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|t| &x[i][t] * &y[t][j]).sum())
                    .collect()
            })
            .collect()
    };
    is_identity(&mul(&a, &b)) && is_identity(&mul(&b, &a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QPoly;

    #[test]
    fn binom_ext_conventions() {
        assert_eq!(binom_ext(5, 2), BigInt::from(10));
        assert_eq!(binom_ext(-1, -1), BigInt::one());
        assert_eq!(binom_ext(-2, -2), BigInt::one());
        assert_eq!(binom_ext(-1, 0), BigInt::zero());
        assert_eq!(binom_ext(3, -1), BigInt::zero());
        assert_eq!(binom_ext(2, 5), BigInt::zero());
        assert_eq!(binom_ext(-3, -3), BigInt::zero());
        assert_eq!(binom_ext(-2, -1), BigInt::zero());
    }

    #[test]
    fn binom_gen_negative_upper() {
        assert_eq!(binom_gen(-1, 0), BigInt::one());
        assert_eq!(binom_gen(-1, 1), BigInt::from(-1));
        assert_eq!(binom_gen(-2, 2), BigInt::from(3));
        assert_eq!(binom_gen(4, 2), BigInt::from(6));
        assert_eq!(binom_gen(4, 7), BigInt::zero());
        assert_eq!(binom_gen(4, -1), BigInt::zero());
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(3, 1), QPoly::from_coeffs([1, 1, 1]));
        // derived from the recurrence: [4,2] = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(qbinom(4, 2), QPoly::from_coeffs([1, 1, 2, 1, 1]));
        assert_eq!(qbinom(2, 5), QPoly::zero());
        assert_eq!(qbinom(0, 0), QPoly::one());
        assert_eq!(qbinom(5, -1), QPoly::zero());
    }

    #[test]
    fn qbinom_second_recurrence_and_q1() {
        // q^{n-k} [n-1,k-1] + [n-1,k] gives the same polynomials,
        // and q = 1 recovers the plain binomial.
        for n in 0..=10i64 {
            for k in 0..=n {
                let alt = if n == 0 {
                    QPoly::one()
                } else {
                    &qbinom(n - 1, k - 1).shift_up((n - k) as usize) + &qbinom(n - 1, k)
                };
                let direct = qbinom(n, k);
                assert_eq!(direct, alt, "recurrence mismatch at ({n},{k})");
                assert_eq!(
                    direct.eval_int(&BigInt::one()),
                    binom(n as u64, k as u64),
                    "q=1 mismatch at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(0, 0), BigInt::one());
        assert_eq!(narayana(4, 2), BigInt::from(6));
        assert_eq!(narayana(3, 0), BigInt::zero());
        assert_eq!(narayana(3, 5), BigInt::zero());
    }

    #[test]
    fn narayana_rows_sum_to_catalan() {
        let mut catalan = BigInt::one();
        for n in 0..=12u64 {
            if n > 0 {
                // C_n = C(2n,n)/(n+1)
                catalan = binom(2 * n, n) / BigInt::from(n + 1);
            }
            let row_sum: BigInt = (0..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(row_sum, catalan, "row {n}");
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_classical(Kind::Second, 4, 2), BigInt::from(7));
        assert_eq!(stirling_classical(Kind::First, 3, 1), BigInt::from(2));
        for n in 0..=8 {
            assert_eq!(stirling_classical(Kind::First, n, n), BigInt::one());
            assert_eq!(stirling_classical(Kind::Second, n, n), BigInt::one());
        }
        assert_eq!(stirling_classical(Kind::First, 5, 2), BigInt::from(50));
        assert_eq!(stirling_classical(Kind::Second, 8, 2), BigInt::from(127));
        assert_eq!(stirling_classical(Kind::Second, 0, 0), BigInt::one());
        assert_eq!(stirling_classical(Kind::Second, 3, 0), BigInt::zero());
    }

    #[test]
    fn coeff_a_examples() {
        assert_eq!(coeff_a(2, 1, 0, 0), BigInt::from(3));
        assert_eq!(coeff_a(5, 2, 1, 0), BigInt::from(75));
        for n in 1..=8 {
            for k in 0..=n {
                assert_eq!(coeff_a(n, k, n - k + 1, 0), BigInt::zero());
            }
        }
    }

    #[test]
    fn coeff_b_examples() {
        assert_eq!(coeff_b(3, 2, 0, 0), BigInt::one());
        assert_eq!(coeff_b(5, 2, 1, 0), BigInt::from(2));
        // the second binomial of the factored form vanishes at i = n-k+1
        for n in 1..=8 {
            for k in 0..=n {
                for j in 0..=n - k {
                    assert_eq!(coeff_b(n + 1, k + 1, n - k + 1, j), BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn diff_equals_fact_small() {
        for n in 0..=10i64 {
            for k in 0..=n {
                for i in 0..=n - k {
                    for j in 0..=i {
                        assert_eq!(
                            coeff_a(n, k, i, j),
                            coeff_a_factored(n, k, i, j),
                            "A at ({n},{k},{i},{j})"
                        );
                        if n + j >= 1 {
                            assert_eq!(
                                coeff_b(n, k, i, j),
                                coeff_b_factored(n, k, i, j),
                                "B at ({n},{k},{i},{j})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_identities_small() {
        for n in 0..=10i64 {
            for k in 0..=n {
                for i in 0..=n - k {
                    for j in 0..=i {
                        assert_eq!(coeff_a(n, k, i, j), coeff_a(n, k - 1, i + 1, j - 1));
                        assert_eq!(coeff_b(n, k, i, j), coeff_b(n + 1, k, i + 1, j - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn signed_matrices_invert() {
        assert!(signed_matrix_inverse_check(1));
        assert!(signed_matrix_inverse_check(5));
        assert!(signed_matrix_inverse_check(10));
    }
}
