//! Independent reference values: Euler–Maclaurin Hurwitz sums and brute
//! force enumeration of mode lattices. Nothing here calls into the crate's
//! numerics.
#![allow(dead_code)]

use num_complex::Complex64;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

const BERNOULLI_2J: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// `ζ_H(s, a)` by Euler–Maclaurin after 12 direct terms; valid for `s ≠ 1`
/// with `|s|` moderate.
pub fn hurwitz(s: Complex64, a: f64) -> Complex64 {
    let n = 12usize;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        sum += c(k as f64 + a).powc(-s);
    }
    let x = n as f64 + a;
    sum += c(x).powc(1.0 - s) / (s - 1.0);
    sum += 0.5 * c(x).powc(-s);
    // (s)_{2j-1} x^{-s-2j+1} B_{2j}/(2j)!
    let mut rising = s;
    let mut fact = 2.0;
    for (j, b) in BERNOULLI_2J.iter().enumerate() {
        let jj = j + 1;
        sum += b / fact * rising * c(x).powc(-s - (2 * jj - 1) as f64);
        rising *= (s + (2 * jj - 1) as f64) * (s + (2 * jj) as f64);
        fact *= ((2 * jj + 1) * (2 * jj + 2)) as f64;
    }
    sum
}

/// `Σ_{k∈ℤ} |k + a|^{-s}` for `a ∈ (0, 1)`.
pub fn abs_lattice_zeta(s: Complex64, a: f64) -> Complex64 {
    hurwitz(s, a) + hurwitz(s, 1.0 - a)
}

/// `Σ_{k∈ℤ} sign(k + a)|k + a|^{-s}` for `a ∈ (0, 1)`.
pub fn signed_lattice_zeta(s: Complex64, a: f64) -> Complex64 {
    hurwitz(s, a) - hurwitz(s, 1.0 - a)
}

/// Eigenvalues `k + a`, `|k| <= k_max`, of the shifted circle Dirac operator.
pub fn dirac_modes(a: f64, k_max: i64) -> Vec<f64> {
    (-k_max..=k_max).map(|k| k as f64 + a).collect()
}

/// Brute force `Σ f(λ)` over the product lattice of two Dirac mode sets.
pub fn product_sum(a: f64, b: f64, k_max: i64, f: impl Fn(f64, f64) -> f64) -> f64 {
    let (x, y) = (dirac_modes(a, k_max), dirac_modes(b, k_max));
    x.iter().flat_map(|u| y.iter().map(move |v| (u, v))).map(|(u, v)| f(*u, *v)).sum()
}

/// Contour-free reference for `p^z` on the principal branch.
pub fn principal_power(p: Complex64, z: Complex64) -> Complex64 {
    (z * p.ln()).exp()
}

/// Residue of a simple pole of `f` at `z0` estimated as `ε f(z0 + ε)` averaged over `±ε, ±iε`.
pub fn residue_estimate(f: impl Fn(Complex64) -> Complex64, z0: Complex64, eps: f64) -> Complex64 {
    let dirs = [c(1.0), c(-1.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)];
    dirs.iter().map(|d| d * eps * f(z0 + d * eps)).sum::<Complex64>() / 4.0
}
