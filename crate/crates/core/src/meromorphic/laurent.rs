use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{par, Error, Result};

/// Minimum number of contour nodes accepted by [`laurent_at`].
pub const MIN_NODES: usize = 64;
pub const DEFAULT_NODES: usize = 128;

/// Local Laurent data `Σ_{j >= -2} c_j (z - center)^j` truncated at `max_index`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentExpansion {
    pub center: Complex64,
    pub radius: f64,
    /// Coefficients `c_{-2}, c_{-1}, c_0, …, c_{max_index}`.
    pub coefficients: Vec<Complex64>,
    pub error_bound: f64,
}

impl LaurentExpansion {
    pub const LOWEST: i32 = -2;

    /// Coefficient `c_j`, or zero outside the stored range.
    pub fn coeff(&self, j: i32) -> Complex64 {
        let idx = j - Self::LOWEST;
        if idx < 0 {
            return Complex64::new(0.0, 0.0);
        }
        self.coefficients
            .get(idx as usize)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn c_minus2(&self) -> Complex64 {
        self.coeff(-2)
    }

    pub fn c_minus1(&self) -> Complex64 {
        self.coeff(-1)
    }

    pub fn c0(&self) -> Complex64 {
        self.coeff(0)
    }

    /// `Res^k` in the sense of the k-th negative coefficient: `k = 1, 2`.
    pub fn residue(&self, k: u32) -> Complex64 {
        self.coeff(-(k as i32))
    }

    /// Pole order (0, 1 or 2) after discarding coefficients below `tol`
    /// (absolute, widened by the extraction error bound).
    pub fn pole_order(&self, tol: f64) -> u8 {
        let t = tol.max(self.error_bound);
        if self.c_minus2().norm() > t {
            2
        } else if self.c_minus1().norm() > t {
            1
        } else {
            0
        }
    }

    pub fn max_index(&self) -> i32 {
        self.coefficients.len() as i32 + Self::LOWEST - 1
    }
}

/// Trapezoidal extraction of `c_{-2}..c_{max_index}` on a single circle.
fn extract<F>(f: &F, z0: Complex64, radius: f64, nodes: usize, max_index: i32) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + Send,
{
    let values = par::try_map_range(nodes, |k| {
        let phi = std::f64::consts::TAU * k as f64 / nodes as f64;
        f(z0 + Complex64::from_polar(radius, phi))
    })?;
    let count = (max_index - LaurentExpansion::LOWEST + 1) as usize;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); count];
    for (slot, c) in coeffs.iter_mut().enumerate() {
        let j = LaurentExpansion::LOWEST + slot as i32;
        // c_j = (1/N) Σ f(z_k) (r e^{iφ_k})^{-j}
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, v) in values.iter().enumerate() {
            let phi = std::f64::consts::TAU * k as f64 / nodes as f64;
            acc += v * Complex64::from_polar(radius.powi(-j), -(j as f64) * phi);
        }
        *c = acc / nodes as f64;
    }
    Ok(coeffs)
}

/// Laurent coefficients of `f` at `z0` from contour quadrature on the
/// circle `|z - z0| = radius`, with an error bound taken from a second
/// extraction at half the radius.
///
/// `f` must be meromorphic in the closed disc with a pole of order at most
/// two at `z0` and no other singularity.
pub fn laurent_at<F>(f: F, z0: Complex64, radius: f64, nodes: usize, max_index: i32) -> Result<LaurentExpansion>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + Send,
{
    if nodes < MIN_NODES {
        return Err(Error::Parameter(format!("at least {MIN_NODES} contour nodes required, got {nodes}")));
    }
    if !(radius > 0.0) {
        return Err(Error::Parameter(format!("contour radius must be positive, got {radius}")));
    }
    let max_index = max_index.max(0);
    let outer = extract(&f, z0, radius, nodes, max_index)?;
    let inner = extract(&f, z0, 0.5 * radius, nodes, max_index)?;
    let scale = outer
        .iter()
        .enumerate()
        .map(|(i, c)| c.norm() * radius.powi(i as i32 + LaurentExpansion::LOWEST))
        .fold(0.0, f64::max);
    // the positive-index coefficients are only meaningful relative to r^j
    let diff = outer
        .iter()
        .zip(&inner)
        .take(3)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let error_bound = diff.max(1e-15 * scale / (radius * radius).min(1.0));
    Ok(LaurentExpansion {
        center: z0,
        radius,
        coefficients: outer,
        error_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rational_test_function() {
        let l = laurent_at(|z| Ok(1.0 / (z * z) + 5.0), c(0.0, 0.0), 0.5, 64, 2).unwrap();
        assert!((l.c_minus2() - 1.0).norm() < 1e-12);
        assert!(l.c_minus1().norm() < 1e-12);
        assert!((l.c0() - 5.0).norm() < 1e-12);
        assert_eq!(l.pole_order(1e-9), 2);
    }

    #[test]
    fn entire_function_has_no_principal_part() {
        let z0 = c(0.3, -0.1);
        let l = laurent_at(|z| Ok(z.exp()), z0, 0.5, 64, 3).unwrap();
        assert!(l.c_minus2().norm() < 1e-12);
        assert!(l.c_minus1().norm() < 1e-12);
        assert!((l.c0() - z0.exp()).norm() < 1e-12);
        assert!((l.coeff(2) - z0.exp() / 2.0).norm() < 1e-12);
        assert_eq!(l.pole_order(1e-9), 0);
    }

    #[test]
    fn too_few_nodes_rejected() {
        assert!(laurent_at(|z| Ok(z), c(0.0, 0.0), 0.5, 32, 1).is_err());
    }

    #[test]
    fn evaluator_errors_propagate() {
        let r = laurent_at(|_| Err(Error::HurwitzPole), c(0.0, 0.0), 0.5, 64, 1);
        assert!(matches!(r, Err(Error::HurwitzPole)));
    }
}
