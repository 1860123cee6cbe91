use num_traits::Zero;

use crate::exactmath::{QPoly, XQPoly};
use crate::qcomb::{binom, binom_ext, qbinom};

use super::PathsError;

/// Parameters `(n, k)` of a Motzkin moment polynomial: `0 <= k <= n` with
/// `n` and `k` of the same parity (a Motzkin path of length `n` with `k`
/// level steps has `(n-k)/2` up-steps).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MuParams {
    n: usize,
    k: usize,
}

impl MuParams {
    pub fn new(n: usize, k: usize) -> Result<Self, PathsError> {
        if k > n {
            return Err(PathsError::OutOfRange { n, k });
        }
        if (n - k) % 2 != 0 {
            return Err(PathsError::ParityViolation { n, k });
        }
        Ok(MuParams { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// The moment polynomial `mu_{n,k}`: the generating function of Motzkin
/// paths of length `n` with exactly `k` level steps, where a level step at
/// height `h` weighs `q^h` and a down-step starting at height `h` weighs
/// `1 - q^h`.
pub fn motzkin_moment(p: MuParams) -> QPoly {
    let (n, k) = (p.n(), p.k());
    let max_h = n / 2 + 1;
    // state: (height, level steps used so far)
    let mut cur = vec![vec![QPoly::zero(); k + 1]; max_h + 1];
    cur[0][0] = QPoly::one();
    for _step in 0..n {
        let mut next = vec![vec![QPoly::zero(); k + 1]; max_h + 1];
        for h in 0..=max_h {
            for l in 0..=k {
                let v = &cur[h][l];
                if v.is_zero() {
                    continue;
                }
                if h + 1 <= max_h {
                    next[h + 1][l] += v;
                }
                if l + 1 <= k {
                    next[h][l + 1] += &v.shift_up(h);
                }
                if h >= 1 {
                    let down = &QPoly::one() - &QPoly::monomial(1, h);
                    next[h - 1][l] += &(v * &down);
                }
            }
        }
        cur = next;
    }
    cur[0][k].clone()
}

/// Closed form of the same moment:
/// `mu_{n,k} = sum_u (-1)^u q^(C(u+1,2)) [k+u, u]_q (C(n, (n-k)/2 - u) - C(n, (n-k)/2 - u - 1))`.
pub fn motzkin_moment_closed(p: MuParams) -> QPoly {
    let (n, k) = (p.n(), p.k());
    let m = (n - k) / 2;
    let mut acc = QPoly::zero();
    for u in 0..=m {
        let gap = binom_ext(n as i64, (m - u) as i64) - binom_ext(n as i64, m as i64 - u as i64 - 1);
        if gap.is_zero() {
            continue;
        }
        let term = qbinom((k + u) as i64, u as i64)
            .scale(&gap)
            .shift_up(u * (u + 1) / 2);
        if u % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Check the expansion of the scaled first-kind row in Motzkin moments:
///
/// `sum_k (1-q)^(n-k) S1[n,k] x^k
///   = sum_{i,j} C(2n-i-j, j) (x-1)^j q^i mu_{2n-2j-i, i}`.
///
/// The left side is assembled from the closed formula for `S1[n,k]`.
pub fn qstsum_check(n: usize) -> bool {
    let mut lhs = XQPoly::zero();
    for k in 0..=n {
        // the scaled closed form already carries the (1-q)^(n-k) factor
        let s1 = crate::formulas::s1_scaled_closed(n as i64, k as i64)
            .expect("0 <= k <= n is always a valid closed-formula argument");
        let mut coeffs = vec![QPoly::zero(); k + 1];
        coeffs[k] = s1;
        lhs += &XQPoly::from_coeffs(coeffs);
    }

    let x_minus_1 = &XQPoly::x() - &XQPoly::one();
    let mut x_minus_1_pow = vec![XQPoly::one()];
    for j in 1..=n {
        x_minus_1_pow.push(&x_minus_1_pow[j - 1] * &x_minus_1);
    }
    let mut rhs = XQPoly::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            let c = binom((2 * n - i - j) as u64, j as u64);
            if c.is_zero() {
                continue;
            }
            let mu = motzkin_moment(
                MuParams::new(2 * n - 2 * j - i, i)
                    .expect("parities agree by construction"),
            );
            let factor = mu.shift_up(i).scale(&c);
            rhs += &x_minus_1_pow[j].scale(&factor);
        }
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(n: usize, k: usize) -> QPoly {
        motzkin_moment(MuParams::new(n, k).unwrap())
    }

    fn mu_closed(n: usize, k: usize) -> QPoly {
        motzkin_moment_closed(MuParams::new(n, k).unwrap())
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(1, 1), QPoly::one());
        assert_eq!(mu(2, 0), QPoly::one_minus_q());
        // three paths: LL at heights 0, UD, and the level-up orderings give
        // 2 - q - q^2
        assert_eq!(mu(3, 1), QPoly::from_coeffs([2, -1, -1]));
    }

    #[test]
    fn mu_closed_examples() {
        for n in 0..=6 {
            assert_eq!(mu_closed(n, n), QPoly::one());
        }
        assert_eq!(mu_closed(2, 0), QPoly::one_minus_q());
        assert_eq!(mu_closed(3, 1), QPoly::from_coeffs([2, -1, -1]));
    }

    #[test]
    fn dp_equals_closed_small() {
        for n in 0..=10 {
            for k in (n % 2..=n).step_by(2) {
                assert_eq!(mu(n, k), mu_closed(n, k), "mu({n},{k})");
            }
        }
    }

    #[test]
    fn parity_and_range_rejected() {
        assert_eq!(
            MuParams::new(3, 2),
            Err(PathsError::ParityViolation { n: 3, k: 2 })
        );
        assert_eq!(MuParams::new(2, 4), Err(PathsError::OutOfRange { n: 2, k: 4 }));
    }

    #[test]
    fn qstsum_small() {
        for n in 0..=6 {
            assert!(qstsum_check(n), "qstsum at n = {n}");
        }
    }
}
