use num_complex::Complex64;

use super::{ModelKind, SpectralOperator};
use crate::symbolcore::{BiOrder, ClassicalBisingularSymbol, Grid, DEFAULT_DEPTH, DEFAULT_GRID};
use crate::{Error, Result};

pub use crate::symbolcore::{CircleFactor, ExactTerm};

/// Exact circle factor and sign of a one-factor model, if it is a torus multiplier.
fn circle_factor(kind: &ModelKind) -> Result<(CircleFactor, f64)> {
    match kind {
        ModelKind::CircleDirac { a, power } => Ok((CircleFactor::single(*a, Complex64::new(*power, 0.0), true), 1.0)),
        ModelKind::AbsCircleDirac { a, power } => {
            if *power == 0.0 {
                Ok((CircleFactor::identity(), 1.0))
            } else {
                Ok((CircleFactor::single(*a, Complex64::new(*power, 0.0), false), 1.0))
            }
        }
        ModelKind::Negated(inner) => {
            let (f, s) = circle_factor(inner)?;
            Ok((f, -s))
        }
        ModelKind::HarmonicOscillator { .. } => Err(Error::NoTorusSymbol("harmonic oscillator".into())),
        ModelKind::FiniteRankProjection { .. } => Err(Error::NoTorusSymbol("finite-rank projection".into())),
        ModelKind::TorusLaplacianShift { .. } => Err(Error::NoTorusSymbol(
            "laplacian shift is not a tensor of circle multipliers".into(),
        )),
        ModelKind::Tensor(..) => Err(Error::NoTorusSymbol("nested tensor products".into())),
    }
}

/// Exact factorization `sign · f₁(ξ₁) f₂(ξ₂)` of a torus multiplier model.
pub(crate) fn multiplier_factors(op: &SpectralOperator) -> Result<(CircleFactor, CircleFactor, f64)> {
    match op.kind() {
        ModelKind::Tensor(a, b) => {
            let (fa, sa) = circle_factor(a)?;
            let (fb, sb) = circle_factor(b)?;
            Ok((fa, fb, sa * sb))
        }
        ModelKind::Negated(inner) => {
            let inner = SpectralOperator::new((**inner).clone())?;
            let (f1, f2, s) = multiplier_factors(&inner)?;
            Ok((f1, f2, -s))
        }
        other => {
            let (f, s) = circle_factor(other)?;
            Ok((f, CircleFactor::identity(), s))
        }
    }
}

/// Classical expansion of a torus multiplier model on the default grid and depth.
pub fn exact_symbol(op: &SpectralOperator) -> Result<ClassicalBisingularSymbol> {
    exact_symbol_with(op, Grid::square(DEFAULT_GRID)?, DEFAULT_DEPTH)
}

/// Classical expansion of a torus multiplier model.
///
/// `sign(ξ + a)^s |ξ + a|^p = Σ_j C(p, j) (aω)^j ω^s |ξ|^{p-j}`, so component
/// `(j, k)` of a tensor is the product of the factor coefficients.
pub fn exact_symbol_with(op: &SpectralOperator, grid: Grid, depth: (usize, usize)) -> Result<ClassicalBisingularSymbol> {
    let (f1, f2, sign) = multiplier_factors(op)?;
    Ok(multiplier_symbol(Complex64::new(sign, 0.0), f1, f2, grid, depth))
}

/// Classical expansion of the exact multiplier `c · f₁(ξ₁) f₂(ξ₂)`; the
/// factors may carry complex powers.
pub fn multiplier_symbol(
    coeff: Complex64,
    f1: CircleFactor,
    f2: CircleFactor,
    grid: Grid,
    depth: (usize, usize),
) -> ClassicalBisingularSymbol {
    let order = BiOrder::complex(f1.degree(), f2.degree());
    let e1 = [f1.expansion(1.0, depth.0 + 1), f1.expansion(-1.0, depth.0 + 1)];
    let e2 = [f2.expansion(1.0, depth.1 + 1), f2.expansion(-1.0, depth.1 + 1)];
    let sym = ClassicalBisingularSymbol::from_fn(order, depth, grid, true, |j, k, _, o1, _, o2| {
        let w1 = usize::from(o1 < 0.0);
        let w2 = usize::from(o2 < 0.0);
        coeff * e1[w1][j] * e2[w2][k]
    });
    sym.with_exact_terms(vec![ExactTerm::new(coeff, f1, f2)])
}
