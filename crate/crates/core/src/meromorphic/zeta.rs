use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::continuation::{binomial, signed_sums};
use super::hurwitz::hurwitz_zeta;
use super::laurent::{laurent_at, DEFAULT_NODES};
use super::poles::{laurent_radius, model_pole_lattice, Chart};
use crate::spectra::{multiplier_factors, CircleFactor, ModelKind, SpectralOperator};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Direction of the spectral cut used for `λ^z` on negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutDirection {
    /// `(-|λ|)^z = e^{-iπz}|λ|^z`
    Up,
    /// `(-|λ|)^z = e^{+iπz}|λ|^z`
    Down,
}

/// Evaluate `f` at `z`; if a Hurwitz pole is hit, fall back to the Laurent
/// expansion and return either its constant term (removable point) or a pole
/// error carrying the expansion.
pub(crate) fn evaluate_or_pole<F>(f: F, z: Complex64, lattice: &[Complex64]) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + Send,
{
    match f(z) {
        Err(Error::HurwitzPole) => {
            let radius = laurent_radius(z, lattice);
            let l = laurent_at(&f, z, radius, DEFAULT_NODES, 2)?;
            if l.pole_order(1e-9) == 0 {
                Ok(l.c0())
            } else {
                Err(Error::Pole { z, laurent: Box::new(l) })
            }
        }
        other => other,
    }
}

fn zeta_raw(op: &SpectralOperator, z: Complex64, dir: CutDirection) -> Result<Complex64> {
    let s = signed_sums(op, z)?;
    let phase = match dir {
        CutDirection::Up => (-I * PI * z).exp(),
        CutDirection::Down => (I * PI * z).exp(),
    };
    Ok(s.pos + phase * s.neg)
}

/// Spectral ζ-function `Tr A^z`, continued meromorphically. Negative
/// eigenvalues use the upward cut.
pub fn zeta(op: &SpectralOperator, z: Complex64) -> Result<Complex64> {
    spectral_cut_zeta(op, CutDirection::Up, z)
}

/// `ζ↑(A, z) = Tr(Π₊|A|^z + e^{-iπz} Π₋|A|^z)`, `ζ↓` with `e^{+iπz}`.
pub fn spectral_cut_zeta(op: &SpectralOperator, dir: CutDirection, z: Complex64) -> Result<Complex64> {
    let lattice = model_pole_lattice(op, Chart::Az);
    evaluate_or_pole(|w| zeta_raw(op, w, dir), z, &lattice)
}

fn eta_raw(op: &SpectralOperator, z: Complex64) -> Result<Complex64> {
    let s = signed_sums(op, -z)?;
    Ok(s.pos - s.neg)
}

/// `η(A, z) = Tr A|A|^{-(z+1)} = Σ sign(λ)|λ|^{-z}`.
pub fn eta(op: &SpectralOperator, z: Complex64) -> Result<Complex64> {
    let lattice = model_pole_lattice(op, Chart::AMinusZ);
    evaluate_or_pole(|w| eta_raw(op, w), z, &lattice)
}

/// Both sides of the spectral-cut identity
/// `η(A, -z) = ζ↑(z) - (ζ↑(z) - ζ↓(z)) / (1 - e^{iπz})`, i.e.
/// `Tr F|A|^z` expressed through the two cuts.
pub fn spectral_cut_identity(op: &SpectralOperator, z: Complex64) -> Result<(Complex64, Complex64)> {
    let denom = 1.0 - (I * PI * z).exp();
    if denom.norm() < 1e-12 {
        return Err(Error::Domain(format!("1 - e^(iπz) vanishes at z = {z}")));
    }
    let up = spectral_cut_zeta(op, CutDirection::Up, z)?;
    let down = spectral_cut_zeta(op, CutDirection::Down, z)?;
    let lhs = eta(op, -z)?;
    Ok((lhs, up - (up - down) / denom))
}

/// Both sides of the printed form `η(A,z) = ζ↓ - ζ↑ + (1 - e^{iπz})ζ↑`.
/// Kept to document that it does not hold as written.
pub fn literal_cut_identity(op: &SpectralOperator, z: Complex64) -> Result<(Complex64, Complex64)> {
    let up = spectral_cut_zeta(op, CutDirection::Up, z)?;
    let down = spectral_cut_zeta(op, CutDirection::Down, z)?;
    let lhs = eta(op, z)?;
    Ok((lhs, down - up + (1.0 - (I * PI * z).exp()) * up))
}

/// `Σ_{k∈ℤ} f(k) |k + b|^{-z}` for a circle multiplier `f` and `b ∉ ℤ`.
pub(crate) fn shifted_series(f: &CircleFactor, b: f64, z: Complex64) -> Result<Complex64> {
    let bf = b - b.floor();
    match f.0.as_slice() {
        [] => Ok(hurwitz_zeta(z, bf)? + hurwitz_zeta(z, 1.0 - bf)?),
        [single] => {
            let af = single.a - single.a.floor();
            let p = single.power;
            let sgn = if single.signed { -1.0 } else { 1.0 };
            if (af - bf).abs() < 1e-15 {
                return Ok(hurwitz_zeta(z - p, af)? + sgn * hurwitz_zeta(z - p, 1.0 - af)?);
            }
            // lattice x = k + a; |k + b| = |x + d| after relabelling k
            let d = bf - af;
            let x_start = (4.0 * d.abs()).max(1.0);
            let mut acc = Complex64::new(0.0, 0.0);
            // positive side: x = af + j
            let first_pos = (x_start - af).ceil().max(0.0);
            for j in 0..first_pos as usize {
                let x = af + j as f64;
                acc += real_pow_c(x, p) * real_pow_c((x + d).abs(), -z);
            }
            acc += binomial_tail(z, p, d, af + first_pos)?;
            // negative side: x = -y, y = (1 - af) + j
            let bf_neg = 1.0 - af;
            let first_neg = (x_start - bf_neg).ceil().max(0.0);
            for j in 0..first_neg as usize {
                let y = bf_neg + j as f64;
                acc += sgn * real_pow_c(y, p) * real_pow_c((y - d).abs(), -z);
            }
            acc += sgn * binomial_tail(z, p, -d, bf_neg + first_neg)?;
            Ok(acc)
        }
        _ => Err(Error::Unsupported("products of several shifted powers in one factor".into())),
    }
}

fn real_pow_c(x: f64, p: Complex64) -> Complex64 {
    (p * x.ln()).exp()
}

/// `Σ_{j>=0} x_j^p (x_j + d)^{-z}` over `x_j = start + j`, `|d| <= start/4`,
/// via `(x + d)^{-z} = Σ_n C(-z, n) d^n x^{-z-n}`.
fn binomial_tail(z: Complex64, p: Complex64, d: f64, start: f64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let ratio = d.abs() / start;
    for n in 0..120 {
        let b = binomial(-z, n);
        if b == Complex64::new(0.0, 0.0) {
            break;
        }
        let size = b.norm() * ratio.powi(n as i32);
        acc += b * d.powi(n as i32) * hurwitz_zeta(z - p + n as f64, start)?;
        if n > 2 && size < 1e-18 {
            break;
        }
    }
    Ok(acc)
}

fn positive_first_order_shift(q: &SpectralOperator) -> Result<f64> {
    match q.kind() {
        ModelKind::AbsCircleDirac { a, power } if *power == 1.0 => Ok(*a),
        _ => Err(Error::Unsupported(
            "double zeta needs Q of the form |D_b| (positive, order 1)".into(),
        )),
    }
}

/// `Tr(B · Q₁^{-z} ⊗ Q₂^{-τ})` for a torus multiplier `B` and
/// `Qᵢ = |D_{bᵢ}|`; factorizes into two shifted Hurwitz series.
pub fn double_zeta(
    b: &SpectralOperator,
    q1: &SpectralOperator,
    q2: &SpectralOperator,
    z: Complex64,
    tau: Complex64,
) -> Result<Complex64> {
    let b1 = positive_first_order_shift(q1)?;
    let b2 = positive_first_order_shift(q2)?;
    let (f1, f2, sign) = multiplier_factors(b).map_err(|e| match e {
        Error::NoTorusSymbol(m) => Error::Unsupported(format!("B does not commute with Q1 ⊗ Q2: {m}")),
        other => other,
    })?;
    Ok(sign * shifted_series(&f1, b1, z)? * shifted_series(&f2, b2, tau)?)
}

/// `z ↦ double_zeta(B, Q1, Q2, z, z)`, continued through removable points.
pub fn diagonal_double_zeta(
    b: &SpectralOperator,
    q1: &SpectralOperator,
    q2: &SpectralOperator,
    z: Complex64,
) -> Result<Complex64> {
    let lattice: Vec<Complex64> = (-6..=6).map(|n| Complex64::new(n as f64, 0.0)).collect();
    evaluate_or_pole(|w| double_zeta(b, q1, q2, w, w), z, &lattice)
}
