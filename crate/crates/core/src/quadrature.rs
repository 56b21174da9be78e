//! Quadrature rules shared by the contour and cosphere integrals.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::par;

/// Nodes `center + radius·e^{iφ_k}` of the `n`-point trapezoidal rule on a
/// circle, together with the weights `dλ/(2πi)`-normalized so that
/// `Σ w_k f(λ_k) ≈ (2πi)^{-1} ∮ f(λ) dλ` (counter-clockwise).
pub fn circle_rule(center: Complex64, radius: f64, n: usize) -> Vec<(Complex64, Complex64)> {
    (0..n)
        .map(|k| {
            let phi = TAU * k as f64 / n as f64;
            let e = Complex64::from_polar(1.0, phi);
            // dλ = i r e^{iφ} dφ, dφ = 2π/n, divided by 2πi
            (center + radius * e, radius * e / n as f64)
        })
        .collect()
}

/// `(2πi)^{-1} ∮ f(λ) dλ` over a counter-clockwise circle, evaluated in
/// parallel over the nodes. The sum is accumulated in node order.
pub fn circle_integral<F>(center: Complex64, radius: f64, n: usize, f: F) -> Complex64
where
    F: Fn(Complex64) -> Complex64 + Sync + Send,
{
    let rule = circle_rule(center, radius, n);
    par::map_slice(&rule, |&(z, w)| w * f(z)).into_iter().sum()
}

/// Tanh-sinh nodes and weights on `[-1, 1]` with step `h` and `|t| <= t_max`.
pub fn tanh_sinh_rule(h: f64, t_max: f64) -> Vec<(f64, f64)> {
    let m = (t_max / h).ceil() as i64;
    let mut out = Vec::with_capacity(2 * m as usize + 1);
    for k in -m..=m {
        let t = k as f64 * h;
        let u = FRAC_PI_2 * t.sinh();
        let x = u.tanh();
        let w = h * FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        if w > 1e-300 && x.abs() < 1.0 {
            out.push((x, w));
        }
    }
    out
}

/// `∫_a^b f(x) dx` by tanh-sinh, for integrands analytic in the open interval.
pub fn tanh_sinh<F: Fn(f64) -> Complex64>(a: f64, b: f64, f: F) -> Complex64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    tanh_sinh_rule(1.0 / 32.0, 3.5)
        .into_iter()
        .map(|(x, w)| w * half * f(mid + half * x))
        .sum()
}

/// `∫_0^∞ f(r) dr` by the exp-sinh substitution `r = exp(π/2·sinh t)`.
///
/// Accurate when `f` decays at least like `r^{-1-δ}` with `δ` not too small;
/// the truncation `|t| <= t_max` cuts the range to about `[e^{-10^{32}}, e^{10^{32}}]`
/// for the default `t_max = 4.5`.
pub fn exp_sinh<F: Fn(f64) -> Complex64>(f: F) -> Complex64 {
    let h: f64 = 1.0 / 32.0;
    let t_max: f64 = 4.5;
    let m = (t_max / h).ceil() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -m..=m {
        let t = k as f64 * h;
        let u = FRAC_PI_2 * t.sinh();
        if u > 700.0 || u < -700.0 {
            continue;
        }
        let r = u.exp();
        let w = h * FRAC_PI_2 * t.cosh() * r;
        acc += w * f(r);
    }
    acc
}

/// Mean of `values` over a uniform periodic grid, i.e. `(2π)^{-1}∫ f dθ` by
/// the trapezoidal rule. Spectrally accurate for smooth periodic data.
pub fn periodic_mean(values: &[Complex64]) -> Complex64 {
    if values.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    values.iter().sum::<Complex64>() / values.len() as f64
}

pub fn uniform_angles(n: usize) -> Vec<f64> {
    (0..n).map(|i| TAU * i as f64 / n as f64).collect()
}
