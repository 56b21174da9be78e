use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::grid::Grid;
use super::symbol::ClassicalBisingularSymbol;
use crate::{par, Error, Result};

/// Closed sector `Λ = {λ : |arg λ - axis_angle| <= half_angle}` together
/// with the keyhole radius `epsilon` of `Λ_ε`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sector {
    pub axis_angle: f64,
    pub half_angle: f64,
    pub epsilon: f64,
}

impl Sector {
    pub fn new(axis_angle: f64, half_angle: f64, epsilon: f64) -> Result<Self> {
        if !(half_angle > 0.0 && half_angle < PI) {
            return Err(Error::Parameter(format!("half angle {half_angle} must lie in (0, π)")));
        }
        if !(epsilon > 0.0) {
            return Err(Error::Parameter(format!("keyhole radius {epsilon} must be positive")));
        }
        Ok(Sector {
            axis_angle,
            half_angle,
            epsilon,
        })
    }

    /// Sector around the negative real axis.
    pub fn left(half_angle: f64) -> Self {
        Sector {
            axis_angle: PI,
            half_angle,
            epsilon: 1e-3,
        }
    }

    /// Sector around the positive imaginary axis.
    pub fn upper(half_angle: f64) -> Self {
        Sector {
            axis_angle: PI / 2.0,
            half_angle,
            epsilon: 1e-3,
        }
    }

    pub fn contains(&self, lambda: Complex64) -> bool {
        if lambda.norm() == 0.0 {
            return true;
        }
        let mut d = (lambda.arg() - self.axis_angle).rem_euclid(TAU);
        if d > PI {
            d -= TAU;
        }
        d.abs() <= self.half_angle
    }

    /// Unit vectors along the two boundary rays.
    pub fn rays(&self) -> [Complex64; 2] {
        [
            Complex64::from_polar(1.0, self.axis_angle - self.half_angle),
            Complex64::from_polar(1.0, self.axis_angle + self.half_angle),
        ]
    }

    /// `λ` samples: the apex and the two boundary rays at log-spaced radii up to `r_max`.
    pub fn boundary_samples(&self, r_max: f64, per_ray: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0)];
        let lo = (1e-3f64).ln();
        let hi = r_max.max(1e-2).ln();
        for ray in self.rays() {
            for i in 0..per_ray {
                let t = if per_ray == 1 { 1.0 } else { i as f64 / (per_ray - 1) as f64 };
                out.push(ray * (lo + t * (hi - lo)).exp());
            }
        }
        out
    }
}

/// Where a Λ-ellipticity condition fails.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticityWitness {
    /// `"joint"`, `"sigma1"` or `"sigma2"`.
    pub condition: String,
    /// `(θ₁, ω₁, θ₂, ω₂)`; the entries not fixed by the condition are `NaN`.
    pub point: [f64; 4],
    pub lambda: Complex64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticityReport {
    pub pass: bool,
    /// Sampled constant `sup (|λ| + 1) / |σ - λ|` on the cospheres.
    pub constant: f64,
    pub witness: Option<EllipticityWitness>,
}

pub const SINGULAR_VALUE_FLOOR: f64 = 1e-8;
pub const LATTICE_MODES: i64 = 16;
const RAY_SAMPLES: usize = 12;

/// `sup_λ (|λ| + 1)/|c - λ|` over the sector samples for one symbol value,
/// or `None` when `c` lies in the sector.
pub(crate) fn joint_quotient(c: Complex64, samples: &[Complex64], sector: &Sector) -> Option<f64> {
    if sector.contains(c) {
        return None;
    }
    // the quotient also tends to 1 as |λ| → ∞
    let mut sup: f64 = 1.0;
    for &l in samples {
        let d = (c - l).norm();
        if d == 0.0 {
            return None;
        }
        sup = sup.max((l.norm() + 1.0) / d);
    }
    Some(sup)
}

/// Excised homogeneous weight `max(|q|, 1)^d`.
fn weight(q: i64, d: Complex64) -> Complex64 {
    Complex64::new((q.unsigned_abs() as f64).max(1.0), 0.0).powc(d)
}

/// Mode matrix on `|p|, |q| <= M` of the one-factor symbol
/// `s(θ, ξ) = Σ_k c_k(θ, sign ξ) max(|ξ|,1)^{d_k}` sampled on `n` angles,
/// where `row(k, i, w)` gives `c_k` at angle index `i` and `w = 0` for `ξ >= 0`.
fn mode_matrix<F>(n: usize, terms: usize, degree: impl Fn(usize) -> Complex64, row: F) -> DMatrix<Complex64>
where
    F: Fn(usize, usize, usize) -> Complex64,
{
    let m = LATTICE_MODES;
    let size = (2 * m + 1) as usize;
    let half = (n / 2) as i64;
    // Fourier coefficients in θ of s(·, q) for each q
    let mut coeffs = vec![Complex64::new(0.0, 0.0); size * n];
    for (qi, q) in (-m..=m).enumerate() {
        let w = usize::from(q < 0);
        let vals: Vec<Complex64> = (0..n)
            .map(|i| (0..terms).map(|k| row(k, i, w) * weight(q, degree(k))).sum())
            .collect();
        for (slot, p) in ((1 - half)..half).enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, v) in vals.iter().enumerate() {
                acc += v * Complex64::from_polar(1.0, -TAU * (p * i as i64) as f64 / n as f64);
            }
            coeffs[qi * n + slot] = acc / n as f64;
        }
    }
    DMatrix::from_fn(size, size, |r, c| {
        let p = r as i64 - m;
        let q = c as i64 - m;
        let shift = p - q;
        if shift.abs() < half {
            coeffs[c * n + (shift + half - 1) as usize]
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn smallest_singular_value(mat: &DMatrix<Complex64>, lambda: Complex64) -> f64 {
    let mut shifted = mat.clone();
    for i in 0..shifted.nrows() {
        shifted[(i, i)] -= lambda;
    }
    shifted.singular_values().iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Check of the Λ-ellipticity conditions on the grid.
///
/// * joint: `c₀₀ - λ ≠ 0` with the sampled bound constant;
/// * `σ₁`, `σ₂`: the one-factor symbols at each frozen cosphere point,
///   quantized on the mode lattice `|ξ| <= 16`, minus `λ` must have smallest
///   singular value above `1e-8` for all sampled `λ` with `|λ| <= R`.
pub fn lambda_elliptic_check(a: &ClassicalBisingularSymbol, sector: &Sector, r: f64) -> Result<EllipticityReport> {
    if !(r > 0.0) {
        return Err(Error::Parameter(format!("R = {r} must be positive")));
    }
    let grid = a.grid();
    let c00 = a.component(0, 0)?;
    let max_abs = c00.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let samples = sector.boundary_samples(r * max_abs.max(1.0), RAY_SAMPLES);
    let mut constant: f64 = 0.0;
    for (idx, &c) in c00.iter().enumerate() {
        match joint_quotient(c, &samples, sector) {
            Some(q) => constant = constant.max(q),
            None => {
                let (t1, o1, t2, o2) = grid.point(idx);
                return Ok(EllipticityReport {
                    pass: false,
                    constant: f64::INFINITY,
                    witness: Some(EllipticityWitness {
                        condition: "joint".into(),
                        point: [t1, o1, t2, o2],
                        lambda: c,
                        value: 0.0,
                    }),
                });
            }
        }
    }
    let lambdas = sector.boundary_samples(r, RAY_SAMPLES);
    if let Some(w) = factor_check(a, &grid, 1, &lambdas)? {
        return Ok(EllipticityReport {
            pass: false,
            constant,
            witness: Some(w),
        });
    }
    if let Some(w) = factor_check(a, &grid, 2, &lambdas)? {
        return Ok(EllipticityReport {
            pass: false,
            constant,
            witness: Some(w),
        });
    }
    Ok(EllipticityReport {
        pass: true,
        constant,
        witness: None,
    })
}

fn factor_check(
    a: &ClassicalBisingularSymbol,
    grid: &Grid,
    factor: usize,
    lambdas: &[Complex64],
) -> Result<Option<EllipticityWitness>> {
    let (d1, d2) = a.depth();
    let order = a.order();
    let (n_frozen, n_free, terms) = if factor == 1 {
        (grid.n1, grid.n2, d2 + 1)
    } else {
        (grid.n2, grid.n1, d1 + 1)
    };
    let frozen: Vec<(usize, usize)> = (0..n_frozen).flat_map(|i| (0..2).map(move |w| (i, w))).collect();
    let results = par::map_slice(&frozen, |&(i, w)| {
        let mat = if factor == 1 {
            mode_matrix(
                n_free,
                terms,
                |k| order.m2 - k as f64,
                |k, i2, w2| a.component(0, k).unwrap()[grid.index(i, w, i2, w2)],
            )
        } else {
            mode_matrix(
                n_free,
                terms,
                |j| order.m1 - j as f64,
                |j, i1, w1| a.component(j, 0).unwrap()[grid.index(i1, w1, i, w)],
            )
        };
        for &l in lambdas {
            let s = smallest_singular_value(&mat, l);
            if s <= SINGULAR_VALUE_FLOOR {
                return Some((l, s));
            }
        }
        None
    });
    for ((i, w), res) in frozen.into_iter().zip(results) {
        if let Some((l, s)) = res {
            let omega = if w == 0 { 1.0 } else { -1.0 };
            let point = if factor == 1 {
                [grid.theta1(i), omega, f64::NAN, f64::NAN]
            } else {
                [f64::NAN, f64::NAN, grid.theta2(i), omega]
            };
            return Ok(Some(EllipticityWitness {
                condition: format!("sigma{factor}"),
                point,
                lambda: l,
                value: s,
            }));
        }
    }
    Ok(None)
}
