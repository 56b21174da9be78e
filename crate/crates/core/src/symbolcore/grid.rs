use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const DEFAULT_GRID: usize = 16;

/// Tensor grid over `(θ₁, ω₁, θ₂, ω₂)` with `θᵢ` uniform on `[0, 2π)` and
/// `ωᵢ ∈ {+1, -1}`. Values are stored row-major in that order; `w = 0`
/// stands for `ω = +1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grid {
    pub n1: usize,
    pub n2: usize,
}

pub fn check_grid_size(n: usize) -> Result<()> {
    if n >= 16 && n.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidGrid(n))
    }
}

impl Grid {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        check_grid_size(n1)?;
        check_grid_size(n2)?;
        Ok(Grid { n1, n2 })
    }

    pub fn square(n: usize) -> Result<Self> {
        Grid::new(n, n)
    }

    pub fn len(&self) -> usize {
        4 * self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dims(&self) -> [usize; 4] {
        [self.n1, 2, self.n2, 2]
    }

    #[inline]
    pub fn index(&self, i1: usize, w1: usize, i2: usize, w2: usize) -> usize {
        ((i1 * 2 + w1) * self.n2 + i2) * 2 + w2
    }

    /// Inverse of [`Grid::index`].
    #[inline]
    pub fn split(&self, idx: usize) -> (usize, usize, usize, usize) {
        let w2 = idx % 2;
        let rest = idx / 2;
        let i2 = rest % self.n2;
        let rest = rest / self.n2;
        (rest / 2, rest % 2, i2, w2)
    }

    pub fn theta1(&self, i1: usize) -> f64 {
        TAU * i1 as f64 / self.n1 as f64
    }

    pub fn theta2(&self, i2: usize) -> f64 {
        TAU * i2 as f64 / self.n2 as f64
    }

    /// `(θ₁, ω₁, θ₂, ω₂)` at a flat index.
    pub fn point(&self, idx: usize) -> (f64, f64, f64, f64) {
        let (i1, w1, i2, w2) = self.split(idx);
        (self.theta1(i1), omega(w1), self.theta2(i2), omega(w2))
    }

    pub fn from_fn<F: Fn(f64, f64, f64, f64) -> Complex64>(&self, f: F) -> Vec<Complex64> {
        (0..self.len())
            .map(|idx| {
                let (t1, o1, t2, o2) = self.point(idx);
                f(t1, o1, t2, o2)
            })
            .collect()
    }
}

#[inline]
pub fn omega(w: usize) -> f64 {
    if w == 0 {
        1.0
    } else {
        -1.0
    }
}

type Matrix = Arc<Vec<Complex64>>;

/// `n × n` matrix of `D^α = (-i∂_θ)^α` on the periodic grid of size `n`,
/// `(1/n) Σ_q q^α e^{iq(θ_r - θ_s)}` over `|q| < n/2` (Nyquist mode dropped).
pub fn derivative_matrix(n: usize, alpha: usize) -> Matrix {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Matrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().expect("derivative cache").get(&(n, alpha)) {
        return m.clone();
    }
    let mut m = vec![Complex64::new(0.0, 0.0); n * n];
    let half = (n / 2) as i64;
    for r in 0..n {
        for s in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for q in (1 - half)..half {
                let qa = (q as f64).powi(alpha as i32);
                let phase = TAU * (q * (r as i64 - s as i64)) as f64 / n as f64;
                acc += qa * Complex64::from_polar(1.0, phase);
            }
            m[r * n + s] = acc / n as f64;
        }
    }
    let m = Arc::new(m);
    cache.lock().expect("derivative cache").insert((n, alpha), m.clone());
    m
}

/// `D_{θ₁}^{α₁} D_{θ₂}^{α₂}` applied to grid values.
pub fn differentiate(grid: &Grid, values: &[Complex64], alpha1: usize, alpha2: usize) -> Vec<Complex64> {
    let mut out = values.to_vec();
    if alpha1 > 0 {
        let m = derivative_matrix(grid.n1, alpha1);
        let src = out.clone();
        for w1 in 0..2 {
            for i2 in 0..grid.n2 {
                for w2 in 0..2 {
                    for r in 0..grid.n1 {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for s in 0..grid.n1 {
                            acc += m[r * grid.n1 + s] * src[grid.index(s, w1, i2, w2)];
                        }
                        out[grid.index(r, w1, i2, w2)] = acc;
                    }
                }
            }
        }
    }
    if alpha2 > 0 {
        let m = derivative_matrix(grid.n2, alpha2);
        let src = out.clone();
        for i1 in 0..grid.n1 {
            for w1 in 0..2 {
                for w2 in 0..2 {
                    for r in 0..grid.n2 {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for s in 0..grid.n2 {
                            acc += m[r * grid.n2 + s] * src[grid.index(i1, w1, s, w2)];
                        }
                        out[grid.index(i1, w1, r, w2)] = acc;
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_sizes() {
        assert!(Grid::new(8, 16).is_err());
        assert!(Grid::new(16, 24).is_err());
        assert!(Grid::new(16, 32).is_ok());
    }

    #[test]
    fn index_round_trip() {
        let g = Grid::new(16, 32).unwrap();
        for idx in [0, 1, 77, g.len() - 1] {
            let (a, b, c, d) = g.split(idx);
            assert_eq!(g.index(a, b, c, d), idx);
        }
    }

    #[test]
    fn spectral_derivative_of_trig_polynomial() {
        let g = Grid::square(16).unwrap();
        // D_θ₁ e^{3iθ₁} = 3 e^{3iθ₁};  D_θ₂² cos(2θ₂) = 4 cos(2θ₂)
        let v = g.from_fn(|t1, _, t2, _| Complex64::from_polar(1.0, 3.0 * t1) * (2.0 * t2).cos());
        let d = differentiate(&g, &v, 1, 2);
        for (x, y) in d.iter().zip(&v) {
            assert!((x - 12.0 * y).norm() < 1e-12);
        }
    }
}
