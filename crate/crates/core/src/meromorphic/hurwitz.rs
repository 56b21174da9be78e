//! Hurwitz zeta function `ζ_H(s, a) = Σ_{k≥0} (k + a)^{-s}` and its
//! continuation to `s ≠ 1`.
//!
//! Two evaluation paths:
//! * Euler–Maclaurin summation with a shifted base point, used for
//!   `Re s >= -4`;
//! * Hurwitz's Fourier-series formula for `Re s < -4`, where the direct
//!   partial sums of Euler–Maclaurin would cancel catastrophically.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::{Error, Result};

const EM_TERMS: usize = 30;
const FOURIER_SWITCH: f64 = -4.0;

/// `B_{2j} / (2j)!` for `j = 1..=EM_TERMS`, from `ζ(2j)`.
fn bernoulli_ratios() -> &'static [f64; EM_TERMS] {
    static TABLE: OnceLock<[f64; EM_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; EM_TERMS];
        for (idx, slot) in t.iter_mut().enumerate() {
            let j = idx + 1;
            let two_j = 2 * j as i32;
            let zeta = match j {
                1 => PI * PI / 6.0,
                2 => PI.powi(4) / 90.0,
                _ => (1..=2000).rev().map(|k| (k as f64).powi(-two_j)).sum(),
            };
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * zeta / TAU.powi(two_j);
        }
        t
    })
}

/// Hurwitz zeta `ζ_H(s, a)` for complex `s ≠ 1` and real `a > 0`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Parameter(format!("hurwitz parameter a = {a} must be positive")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::HurwitzPole);
    }
    if s.re < FOURIER_SWITCH {
        Ok(fourier_branch(s, a))
    } else {
        Ok(euler_maclaurin(s, a))
    }
}

fn euler_maclaurin(s: Complex64, a: f64) -> Complex64 {
    let target = 7.0 + 0.3 * s.norm();
    let n = if a >= target { 0 } else { (target - a).ceil() as usize };
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        acc += (-s * (k as f64 + a).ln()).exp();
    }
    let x = a + n as f64;
    let lx = x.ln();
    let one = Complex64::new(1.0, 0.0);
    // X^{1-s}/(s-1) + X^{-s}/2
    let x_pow_neg_s = (-s * lx).exp();
    acc += x_pow_neg_s * x / (s - one) + 0.5 * x_pow_neg_s;
    let ratios = bernoulli_ratios();
    // (s)_{2j-1} X^{-s-2j+1}
    let mut poch = s;
    let mut xpow = x_pow_neg_s / x;
    let inv_x2 = 1.0 / (x * x);
    let mut prev = f64::INFINITY;
    for (idx, r) in ratios.iter().enumerate() {
        let term = *r * poch * xpow;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        acc += term;
        if mag <= 1e-18 * acc.norm() {
            break;
        }
        prev = mag;
        let j = idx as f64 + 1.0;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        xpow *= inv_x2;
    }
    acc
}

fn fourier_branch(s: Complex64, a: f64) -> Complex64 {
    // reduce to 0 < a <= 1
    let mut base = a - a.floor();
    if base == 0.0 {
        base = 1.0;
    }
    let shift = (a - base).round() as usize;
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let p = -one_minus_s.re;
    // tail of Σ n^{p} below 1e-17 relative to the first term
    let terms = ((1e17f64).powf(1.0 / (-p - 1.0)).ceil() as usize).clamp(64, 200_000);
    let mut cos_sum = Complex64::new(0.0, 0.0);
    let mut sin_sum = Complex64::new(0.0, 0.0);
    for n in (1..=terms).rev() {
        let nf = n as f64;
        let w = (-one_minus_s * nf.ln()).exp();
        let ang = TAU * nf * base;
        cos_sum += w * ang.cos();
        sin_sum += w * ang.sin();
    }
    let half_pi_s = s * (PI / 2.0);
    let pref = 2.0 * gamma(one_minus_s) * (-one_minus_s * TAU.ln()).exp();
    let mut value = pref * (half_pi_s.sin() * cos_sum + half_pi_s.cos() * sin_sum);
    for k in 0..shift {
        value -= (-s * (base + k as f64).ln()).exp();
    }
    value
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex Gamma function (Lanczos approximation with reflection).
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let pi = Complex64::new(PI, 0.0);
        return pi / ((pi * z).sin() * gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pole_is_an_error() {
        assert!(matches!(hurwitz_zeta(c(1.0, 0.0), 0.3), Err(Error::HurwitzPole)));
    }

    #[test]
    fn basel() {
        let v = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn value_at_zero_is_half_minus_a() {
        for a in [0.1, 0.25, 0.5, 0.9, 1.7] {
            let v = hurwitz_zeta(c(0.0, 0.0), a).unwrap();
            assert!((v - c(0.5 - a, 0.0)).norm() < 1e-13, "a = {a}: {v}");
        }
    }

    #[test]
    fn negative_integers_match_bernoulli_polynomials() {
        // ζ_H(-1, a) = -B_2(a)/2, B_2(a) = a² - a + 1/6
        for a in [0.2, 0.5, 0.75] {
            let v = hurwitz_zeta(c(-1.0, 0.0), a).unwrap();
            let b2 = a * a - a + 1.0 / 6.0;
            assert!((v.re + b2 / 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn simple_pole_has_unit_residue() {
        for a in [0.25, 0.5, 0.8] {
            let eps = 1e-4;
            let v = hurwitz_zeta(c(1.0 + eps, 0.0), a).unwrap();
            assert!((eps * v - 1.0).norm() < 1e-3);
        }
    }

    #[test]
    fn gamma_known_values() {
        assert!((gamma(c(5.0, 0.0)) - 24.0).norm() < 1e-12);
        assert!((gamma(c(0.5, 0.0)).re - PI.sqrt()).abs() < 1e-13);
        assert!((gamma(c(-0.5, 0.0)).re + 2.0 * PI.sqrt()).abs() < 1e-12);
    }
}
