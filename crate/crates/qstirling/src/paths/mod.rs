//! Weighted-lattice-path dynamic programming.
//!
//! Three path models, each equivalent to a continued fraction for the
//! ordinary generating function of its weighted counts:
//!
//! - **Motzkin** (J-fraction): steps up/level/down, weights `a_i` for a
//!   down-step starting at height `i` and `b_i` for a level step at height
//!   `i`. Instantiated with `b_0 = x`, `b_h = x + [h]_q`, `a_h = [h]_q x`
//!   this produces `sum_k S2[n,k] x^k`.
//! - **Dyck with memory** (T-fraction): the weight of a down-step starting
//!   at height `i` depends on whether the previous step was up (`b_i`) or
//!   down (`c_i`). With `b_i = x`, `c_i = [i]_q` this produces
//!   `sum_k S1[n,k] x^k`.
//! - **Schröder** (T-fraction with level steps): down-steps weighted `c_i`,
//!   double-level steps weighted `d_i`. With `c_i = 1 - q^i`,
//!   `d_i = (x - 1) + q^{i+1}` this produces the `(1-q)^{n-k}`-scaled first
//!   kind.
//!
//! Series coefficients are extracted by exact DP over (position, height),
//! never by symbolic fraction expansion; [`cfrac`] implements the truncated
//! continued fractions once, as an independent oracle against the DP.

mod cfrac;
mod moments;

pub use cfrac::{s1_schroder_series, s1_tfraction_series, s2_jfraction_series};
pub use moments::{motzkin_moment, motzkin_moment_closed, qstsum_check, MuParams};

use crate::exactmath::{QPoly, XQPoly};
use crate::qcomb::q_int;

/// Errors from the paths module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathsError {
    /// Motzkin moments need `n` and `k` of the same parity.
    #[error("mu({n},{k}): n and k must have the same parity")]
    ParityViolation { n: usize, k: usize },
    /// `k > n` or similar range violation.
    #[error("mu({n},{k}): need 0 <= k <= n")]
    OutOfRange { n: usize, k: usize },
}

type WeightFn = Box<dyn Fn(usize) -> XQPoly>;

/// Height-indexed step weights defining one of the three path models.
pub struct WeightSpec {
    model: Model,
}

enum Model {
    Motzkin { down: WeightFn, level: WeightFn },
    DyckT { after_up: WeightFn, after_down: WeightFn },
    Schroder { down: WeightFn, level: WeightFn },
}

impl WeightSpec {
    /// Motzkin weights: `down(i)` for a down-step starting at height `i`,
    /// `level(i)` for a level step at height `i`; up-steps weigh 1.
    pub fn motzkin(
        down: impl Fn(usize) -> XQPoly + 'static,
        level: impl Fn(usize) -> XQPoly + 'static,
    ) -> Self {
        WeightSpec {
            model: Model::Motzkin {
                down: Box::new(down),
                level: Box::new(level),
            },
        }
    }

    /// Dyck weights with one step of memory: `after_up(i)` for a down-step
    /// from height `i` following an up-step, `after_down(i)` following a
    /// down-step.
    pub fn dyck_t(
        after_up: impl Fn(usize) -> XQPoly + 'static,
        after_down: impl Fn(usize) -> XQPoly + 'static,
    ) -> Self {
        WeightSpec {
            model: Model::DyckT {
                after_up: Box::new(after_up),
                after_down: Box::new(after_down),
            },
        }
    }

    /// Schröder weights: `down(i)` for a down-step starting at height `i`,
    /// `level(i)` for a `(2,0)` step at height `i`.
    pub fn schroder(
        down: impl Fn(usize) -> XQPoly + 'static,
        level: impl Fn(usize) -> XQPoly + 'static,
    ) -> Self {
        WeightSpec {
            model: Model::Schroder {
                down: Box::new(down),
                level: Box::new(level),
            },
        }
    }

    /// The Motzkin weights whose length-`n` generating function is
    /// `sum_k S2[n,k] x^k`.
    pub fn stirling2_motzkin() -> Self {
        WeightSpec::motzkin(
            |h| XQPoly::x().scale(&q_int(h)),
            |h| {
                if h == 0 {
                    XQPoly::x()
                } else {
                    &XQPoly::x() + &XQPoly::constant(q_int(h))
                }
            },
        )
    }

    /// The Dyck weights whose half-length-`n` generating function is
    /// `sum_k S1[n,k] x^k`.
    pub fn stirling1_dyck() -> Self {
        WeightSpec::dyck_t(|_| XQPoly::x(), |h| XQPoly::constant(q_int(h)))
    }

    /// The Schröder weights whose half-length-`n` generating function is
    /// `sum_k (1-q)^{n-k} S1[n,k] x^k`.
    pub fn stirling1_schroder() -> Self {
        WeightSpec::schroder(
            |h| XQPoly::constant(&QPoly::one() - &QPoly::monomial(1, h)),
            |h| {
                let x_minus_1 = &XQPoly::x() - &XQPoly::one();
                &x_minus_1 + &XQPoly::constant(QPoly::monomial(1, h + 1))
            },
        )
    }
}

/// Weighted generating function of the paths of the given model: Motzkin
/// paths of length `n`, or Dyck/Schröder paths of length `2n`.
pub fn path_gf(spec: &WeightSpec, n: usize) -> XQPoly {
    match &spec.model {
        Model::Motzkin { down, level } => motzkin_dp(n, down, level),
        Model::DyckT {
            after_up,
            after_down,
        } => dyck_t_dp(n, after_up, after_down),
        Model::Schroder { down, level } => schroder_dp(n, down, level),
    }
}

/// `sum_k S2[n,k] x^k` via the Motzkin model.
pub fn s2_via_jfraction(n: usize) -> XQPoly {
    path_gf(&WeightSpec::stirling2_motzkin(), n)
}

/// `sum_k S1[n,k] x^k` via the Dyck model.
pub fn s1_via_tfraction(n: usize) -> XQPoly {
    path_gf(&WeightSpec::stirling1_dyck(), n)
}

/// `sum_k (1-q)^{n-k} S1[n,k] x^k` via the Schröder model.
pub fn s1_scaled_via_schroder(n: usize) -> XQPoly {
    path_gf(&WeightSpec::stirling1_schroder(), n)
}

fn motzkin_dp(n: usize, down: &WeightFn, level: &WeightFn) -> XQPoly {
    let down_w: Vec<XQPoly> = (0..=n).map(|h| down(h)).collect();
    let level_w: Vec<XQPoly> = (0..=n).map(|h| level(h)).collect();
    let mut cur = vec![XQPoly::zero(); n + 1];
    cur[0] = XQPoly::one();
    for _step in 0..n {
        let mut next = vec![XQPoly::zero(); n + 1];
        for (h, v) in cur.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if h + 1 <= n {
                next[h + 1] += v;
            }
            next[h] += &(v * &level_w[h]);
            if h >= 1 {
                next[h - 1] += &(v * &down_w[h]);
            }
        }
        cur = next;
    }
    cur[0].clone()
}

fn dyck_t_dp(n: usize, after_up: &WeightFn, after_down: &WeightFn) -> XQPoly {
    if n == 0 {
        return XQPoly::one();
    }
    let up_w: Vec<XQPoly> = (0..=n).map(|h| after_up(h)).collect();
    let down_w: Vec<XQPoly> = (0..=n).map(|h| after_down(h)).collect();
    // state: (height, last step was down?)
    let mut cur_up = vec![XQPoly::zero(); n + 1];
    let mut cur_down = vec![XQPoly::zero(); n + 1];
    cur_up[0] = XQPoly::one(); // nothing behind us; only an up-step can follow
    for _step in 0..2 * n {
        let mut next_up = vec![XQPoly::zero(); n + 1];
        let mut next_down = vec![XQPoly::zero(); n + 1];
        for h in 0..=n {
            let from_up = &cur_up[h];
            if !from_up.is_zero() {
                if h + 1 <= n {
                    next_up[h + 1] += from_up;
                }
                if h >= 1 {
                    next_down[h - 1] += &(from_up * &up_w[h]);
                }
            }
            let from_down = &cur_down[h];
            if !from_down.is_zero() {
                if h + 1 <= n {
                    next_up[h + 1] += from_down;
                }
                if h >= 1 {
                    next_down[h - 1] += &(from_down * &down_w[h]);
                }
            }
        }
        cur_up = next_up;
        cur_down = next_down;
    }
    &cur_up[0] + &cur_down[0]
}

fn schroder_dp(n: usize, down: &WeightFn, level: &WeightFn) -> XQPoly {
    let down_w: Vec<XQPoly> = (0..=n).map(|h| down(h)).collect();
    let level_w: Vec<XQPoly> = (0..=n).map(|h| level(h)).collect();
    let len = 2 * n;
    // grid[pos][h]: level steps advance two length units, so fill forward
    let mut grid = vec![vec![XQPoly::zero(); n + 1]; len + 1];
    grid[0][0] = XQPoly::one();
    for pos in 0..len {
        for h in 0..=n {
            if grid[pos][h].is_zero() {
                continue;
            }
            let v = grid[pos][h].clone();
            if h + 1 <= n && pos + 1 <= len {
                grid[pos + 1][h + 1] += &v;
            }
            if h >= 1 && pos + 1 <= len {
                let w = &v * &down_w[h];
                grid[pos + 1][h - 1] += &w;
            }
            if pos + 2 <= len {
                let w = &v * &level_w[h];
                grid[pos + 2][h] += &w;
            }
        }
    }
    grid[len][0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QPoly;

    fn ones(_: usize) -> XQPoly {
        XQPoly::one()
    }

    #[test]
    fn unit_weight_counts() {
        // Motzkin numbers 1, 1, 2, 4, 9, 21
        let spec = WeightSpec::motzkin(ones, ones);
        let motzkin = [1i64, 1, 2, 4, 9, 21];
        for (n, &m) in motzkin.iter().enumerate() {
            assert_eq!(path_gf(&spec, n), XQPoly::constant(QPoly::constant(m)));
        }
        // Catalan numbers count Dyck paths of length 2n
        let spec = WeightSpec::dyck_t(ones, ones);
        let catalan = [1i64, 1, 2, 5, 14, 42];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(path_gf(&spec, n), XQPoly::constant(QPoly::constant(c)));
        }
        // large Schröder numbers 1, 2, 6, 22, 90
        let spec = WeightSpec::schroder(ones, ones);
        let schroder = [1i64, 2, 6, 22, 90];
        for (n, &s) in schroder.iter().enumerate() {
            assert_eq!(path_gf(&spec, n), XQPoly::constant(QPoly::constant(s)));
        }
    }

    #[test]
    fn jfraction_small_slices() {
        assert_eq!(s2_via_jfraction(0), XQPoly::one());
        // n = 3: x^3 + 3x^2 + x
        let n3 = s2_via_jfraction(3);
        assert_eq!(n3.coeff(3), QPoly::one());
        assert_eq!(n3.coeff(2), QPoly::constant(3));
        assert_eq!(n3.coeff(1), QPoly::one());
        assert_eq!(n3.coeff(0), QPoly::zero());
        // n = 4, coefficient of x^2: q + 6
        assert_eq!(s2_via_jfraction(4).coeff(2), QPoly::from_coeffs([6, 1]));
    }

    #[test]
    fn tfraction_small_slices() {
        assert_eq!(s1_via_tfraction(0), XQPoly::one());
        // n = 3: x^3 + 3x^2 + (q+1)x
        let n3 = s1_via_tfraction(3);
        assert_eq!(n3.coeff(3), QPoly::one());
        assert_eq!(n3.coeff(2), QPoly::constant(3));
        assert_eq!(n3.coeff(1), QPoly::from_coeffs([1, 1]));
        // n = 4, coefficient of x: q^3 + 2q^2 + 2q + 1
        assert_eq!(
            s1_via_tfraction(4).coeff(1),
            QPoly::from_coeffs([1, 2, 2, 1])
        );
    }

    #[test]
    fn schroder_small_slices() {
        assert_eq!(s1_scaled_via_schroder(0), XQPoly::one());
        assert_eq!(s1_scaled_via_schroder(1), XQPoly::x());
        // n = 2: x^2 + (1-q)x
        let n2 = s1_scaled_via_schroder(2);
        assert_eq!(n2.coeff(2), QPoly::one());
        assert_eq!(n2.coeff(1), QPoly::one_minus_q());
        assert_eq!(n2.coeff(0), QPoly::zero());
    }
}
