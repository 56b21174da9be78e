//! Closed-form continuation of the signed power sums
//! `P(z) = Σ_{λ>0} λ^z` and `N(z) = Σ_{λ<0} |λ|^z` (with multiplicities).

use num_complex::Complex64;

use super::hurwitz::hurwitz_zeta;
use crate::spectra::{ModelKind, SpectralOperator};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedSums {
    pub pos: Complex64,
    pub neg: Complex64,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn frac(a: f64) -> f64 {
    a - a.floor()
}

/// Generalized binomial coefficient `C(z, n)`.
pub(crate) fn binomial(z: Complex64, n: usize) -> Complex64 {
    let mut c = Complex64::new(1.0, 0.0);
    for i in 0..n {
        c *= (z - i as f64) / (i as f64 + 1.0);
    }
    c
}

fn real_pow(x: f64, z: Complex64) -> Complex64 {
    (z * x.ln()).exp()
}

pub fn signed_sums(op: &SpectralOperator, z: Complex64) -> Result<SignedSums> {
    sums(op.kind(), z)
}

fn sums(kind: &ModelKind, z: Complex64) -> Result<SignedSums> {
    Ok(match kind {
        ModelKind::CircleDirac { a, power } => {
            let f = frac(*a);
            let s = -z * *power;
            SignedSums {
                pos: hurwitz_zeta(s, f)?,
                neg: hurwitz_zeta(s, 1.0 - f)?,
            }
        }
        ModelKind::AbsCircleDirac { a, power } => {
            let f = frac(*a);
            let s = -z * *power;
            SignedSums {
                pos: hurwitz_zeta(s, f)? + hurwitz_zeta(s, 1.0 - f)?,
                neg: ZERO,
            }
        }
        ModelKind::TorusLaplacianShift { c } => SignedSums {
            pos: laplacian_sum(*c, z)?,
            neg: ZERO,
        },
        ModelKind::HarmonicOscillator { n } => SignedSums {
            pos: oscillator_sum(*n, z)?,
            neg: ZERO,
        },
        ModelKind::FiniteRankProjection { rank } => SignedSums {
            pos: Complex64::new(*rank as f64, 0.0),
            neg: ZERO,
        },
        ModelKind::Tensor(a, b) => {
            let x = sums(a, z)?;
            let y = sums(b, z)?;
            SignedSums {
                pos: x.pos * y.pos + x.neg * y.neg,
                neg: x.pos * y.neg + x.neg * y.pos,
            }
        }
        ModelKind::Negated(a) => {
            let x = sums(a, z)?;
            SignedSums { pos: x.neg, neg: x.pos }
        }
    })
}

/// `Σ_{k∈ℤ} (k² + c)^z = c^z + 2Σ_{k<=K}(k²+c)^z + 2Σ_n C(z,n) c^n ζ_H(2n - 2z, K+1)`.
fn laplacian_sum(c: f64, z: Complex64) -> Result<Complex64> {
    let k_cut = ((2.0 * c.sqrt()).ceil() as usize).max(8);
    let mut acc = real_pow(c, z);
    for k in 1..=k_cut {
        acc += 2.0 * real_pow((k * k) as f64 + c, z);
    }
    let base = (k_cut + 1) as f64;
    let ratio = c / (base * base);
    let mut tail = ZERO;
    for n in 0..200 {
        let b = binomial(z, n);
        // size of the n-th term relative to the leading power of the tail
        let size = b.norm() * ratio.powi(n as i32);
        if n > 4 && size < 1e-18 {
            break;
        }
        if b == ZERO {
            break;
        }
        tail += b * c.powi(n as i32) * hurwitz_zeta(Complex64::new(2.0 * n as f64, 0.0) - 2.0 * z, base)?;
    }
    Ok(acc + 2.0 * tail)
}

/// Multiplicity `C(k+n-1, n-1)` of the oscillator level `2k + n` as a
/// polynomial in `u = k + n/2`.
fn oscillator_polynomial(n: u32) -> Vec<f64> {
    let shift = n as f64 / 2.0;
    let mut poly = vec![1.0];
    let mut norm = 1.0;
    for i in 1..n {
        // multiply by (u - shift + i)
        let c0 = i as f64 - shift;
        let mut next = vec![0.0; poly.len() + 1];
        for (d, p) in poly.iter().enumerate() {
            next[d] += p * c0;
            next[d + 1] += p;
        }
        poly = next;
        norm *= i as f64;
    }
    poly.iter().map(|p| p / norm).collect()
}

/// `Σ_k C(k+n-1, n-1) (2k+n)^z = 2^z Σ_j p_j ζ_H(-z-j, n/2)`.
fn oscillator_sum(n: u32, z: Complex64) -> Result<Complex64> {
    let poly = oscillator_polynomial(n);
    let mut acc = ZERO;
    for (j, p) in poly.iter().enumerate() {
        if *p != 0.0 {
            acc += *p * hurwitz_zeta(-z - j as f64, n as f64 / 2.0)?;
        }
    }
    Ok(real_pow(2.0, z) * acc)
}

/// Partial sums over the first `count` enumerated eigenvalues; for testing
/// the closed forms where the series converge.
pub fn direct_signed_sums(op: &SpectralOperator, z: Complex64, count: usize) -> Result<SignedSums> {
    let mut pos = ZERO;
    let mut neg = ZERO;
    for d in op.eigenvalues(count)?.iter().rev() {
        let v = d.multiplicity as f64 * real_pow(d.value.abs(), z);
        if d.sign > 0 {
            pos += v;
        } else if d.sign < 0 {
            neg += v;
        }
    }
    Ok(SignedSums { pos, neg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::make_model;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn oscillator_polynomial_reproduces_multiplicities() {
        for n in 1..5u32 {
            let p = oscillator_polynomial(n);
            for k in 0..6u64 {
                let u = k as f64 + n as f64 / 2.0;
                let v: f64 = p.iter().enumerate().map(|(j, c)| c * u.powi(j as i32)).sum();
                let exact: f64 = (1..n as u64).map(|i| (k + i) as f64 / i as f64).product();
                assert!((v - exact).abs() < 1e-10, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_forms_match_direct_sums_where_convergent() {
        let z = c(-4.0, 0.4);
        for kind in [
            ModelKind::circle_dirac(0.3),
            ModelKind::TorusLaplacianShift { c: 2.5 },
            ModelKind::HarmonicOscillator { n: 2 },
        ] {
            let op = make_model(kind).unwrap();
            let closed = signed_sums(&op, z).unwrap();
            let direct = direct_signed_sums(&op, z, 20000).unwrap();
            assert!((closed.pos - direct.pos).norm() < 1e-7, "{op:?}");
            assert!((closed.neg - direct.neg).norm() < 1e-7, "{op:?}");
        }
    }
}
