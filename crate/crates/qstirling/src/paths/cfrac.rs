//! Truncated continued fractions, as an oracle against the path DP.
//!
//! The three fraction shapes are expanded bottom-up as power series in `z`
//! (with `XQPoly` coefficients) truncated at a requested order. Level `h` of
//! a fraction only contributes to orders `>= h-1`, so including `order + 1`
//! levels is always enough; the DP and the fraction must then agree
//! coefficient for coefficient up to the truncation order.

use crate::exactmath::{QPoly, XQPoly};
use crate::qcomb::q_int;

/// Coefficients of `z^0 ..= z^order` of the J-fraction whose series is
/// `sum_n (sum_k S2[n,k] x^k) z^n`: level weights `b_0 = x`,
/// `b_h = x + [h]_q`, and `z^2`-numerators `a_h = [h]_q x`.
pub fn s2_jfraction_series(order: usize) -> Vec<XQPoly> {
    let x = XQPoly::x();
    let b = |h: usize| {
        if h == 0 {
            x.clone()
        } else {
            &x + &XQPoly::constant(q_int(h))
        }
    };
    let a = |h: usize| x.scale(&q_int(h));
    let mut g = series_one(order);
    for h in (0..=order).rev() {
        // 1 - b_h z - a_{h+1} z^2 G
        let mut den = series_one(order);
        sub_shifted(&mut den, &series_const(order, b(h)), 1);
        let tail = series_scale(&g, &a(h + 1));
        sub_shifted(&mut den, &tail, 2);
        g = series_recip(&den);
    }
    g
}

/// Coefficients of the T-fraction whose series is
/// `sum_n (sum_k S1[n,k] x^k) z^n`: level `h` reads
/// `1 - (x - [h]_q) z - [h]_q z G_{h+1}`.
pub fn s1_tfraction_series(order: usize) -> Vec<XQPoly> {
    let x = XQPoly::x();
    let mut g = series_one(order);
    for h in (1..=order + 1).rev() {
        let level = &x - &XQPoly::constant(q_int(h));
        let mut den = series_one(order);
        sub_shifted(&mut den, &series_const(order, level), 1);
        let tail = series_scale(&g, &XQPoly::constant(q_int(h)));
        sub_shifted(&mut den, &tail, 1);
        g = series_recip(&den);
    }
    g
}

/// Coefficients of the Schröder-model T-fraction whose series is
/// `sum_n (sum_k (1-q)^(n-k) S1[n,k] x^k) z^n`: level weights
/// `d_h = (x-1) + q^{h+1}`, `z`-numerators `c_h = 1 - q^h`.
pub fn s1_schroder_series(order: usize) -> Vec<XQPoly> {
    let x = XQPoly::x();
    let d = |h: usize| {
        let x_minus_1 = &x - &XQPoly::one();
        &x_minus_1 + &XQPoly::constant(QPoly::monomial(1, h + 1))
    };
    let c = |h: usize| XQPoly::constant(&QPoly::one() - &QPoly::monomial(1, h));
    let mut g = series_one(order);
    for h in (0..=order).rev() {
        let mut den = series_one(order);
        sub_shifted(&mut den, &series_const(order, d(h)), 1);
        let tail = series_scale(&g, &c(h + 1));
        sub_shifted(&mut den, &tail, 1);
        g = series_recip(&den);
    }
    g
}

fn series_one(order: usize) -> Vec<XQPoly> {
    let mut s = vec![XQPoly::zero(); order + 1];
    s[0] = XQPoly::one();
    s
}

fn series_const(order: usize, c: XQPoly) -> Vec<XQPoly> {
    let mut s = vec![XQPoly::zero(); order + 1];
    s[0] = c;
    s
}

fn series_scale(s: &[XQPoly], c: &XQPoly) -> Vec<XQPoly> {
    s.iter().map(|a| a * c).collect()
}

/// `target -= z^shift * s`, truncating at the series order.
fn sub_shifted(target: &mut [XQPoly], s: &[XQPoly], shift: usize) {
    let order = target.len() - 1;
    for (m, v) in s.iter().enumerate() {
        if m + shift > order {
            break;
        }
        target[m + shift] = &target[m + shift] - v;
    }
}

/// Reciprocal of a series with constant term 1.
fn series_recip(d: &[XQPoly]) -> Vec<XQPoly> {
    assert_eq!(d[0], XQPoly::one(), "series reciprocal needs constant term 1");
    let order = d.len() - 1;
    let mut r = vec![XQPoly::zero(); order + 1];
    r[0] = XQPoly::one();
    for m in 1..=order {
        let mut acc = XQPoly::zero();
        for t in 1..=m {
            acc += &(&d[t] * &r[m - t]);
        }
        r[m] = -&acc;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{s1_scaled_via_schroder, s1_via_tfraction, s2_via_jfraction};

    #[test]
    fn jfraction_truncation_matches_dp() {
        let series = s2_jfraction_series(6);
        for (n, coeff) in series.iter().enumerate() {
            assert_eq!(coeff, &s2_via_jfraction(n), "z^{n}");
        }
    }

    #[test]
    fn tfraction_truncation_matches_dp() {
        let series = s1_tfraction_series(6);
        for (n, coeff) in series.iter().enumerate() {
            assert_eq!(coeff, &s1_via_tfraction(n), "z^{n}");
        }
    }

    #[test]
    fn schroder_truncation_matches_dp() {
        let series = s1_schroder_series(6);
        for (n, coeff) in series.iter().enumerate() {
            assert_eq!(coeff, &s1_scaled_via_schroder(n), "z^{n}");
        }
    }
}
