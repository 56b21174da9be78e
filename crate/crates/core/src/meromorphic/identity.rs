use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::laurent::laurent_at;
use super::poles::{laurent_in_chart, laurent_radius, model_pole_lattice, Chart, SpectralFunction};
use super::zeta::{spectral_cut_zeta, CutDirection};
use crate::spectra::SpectralOperator;
use crate::wodzicki::scaled_wres_of_sign_power;
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Second residues at `σ` entering the η/ζ-cut/Wodzicki identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueIdentityReport {
    pub sigma: f64,
    /// `Res²_{z=σ} η(A, z)`.
    pub eta: Complex64,
    /// `Res²_{z=σ}` of `ζ↑(-z) - (ζ↑(-z) - ζ↓(-z))/(1 - e^{-iπz})`, which equals η identically.
    pub cut: Complex64,
    /// `Res²_{z=σ}(ζ↓(z) - ζ↑(z))`.
    pub cut_difference: Complex64,
    /// `m₁m₂ · Wres²(F|A|^{-σ})`; `None` without a torus symbol.
    pub wres: Option<Complex64>,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn cut_c2<F>(f: F, sigma: f64, lattice: &[Complex64]) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + Send,
{
    let z0 = Complex64::new(sigma, 0.0);
    // e^{±iπz} = 1 at even integers adds candidates
    let mut cands: Vec<Complex64> = lattice.to_vec();
    cands.extend((-8..=8).map(|n| Complex64::new(2.0 * n as f64, 0.0)));
    let radius = laurent_radius(z0, &cands);
    Ok(laurent_at(
        |w| match f(w) {
            Err(Error::Pole { laurent, .. }) => Ok(laurent.c0()),
            other => other,
        },
        z0,
        radius,
        256,
        2,
    )?
    .c_minus2())
}

/// Compare the second residues of η at `σ` with the ζ-cut representation and,
/// when the model has a torus symbol, with `m₁m₂ Wres²(F|A|^{-σ})`.
///
/// `Res²(ζ↓ - ζ↑)` is reported as well; it is only compared at `σ = 0`.
pub fn residue_identity_check(op: &SpectralOperator, sigma: f64, tol: f64) -> Result<ResidueIdentityReport> {
    let eta = laurent_in_chart(op, SpectralFunction::Eta, Chart::AMinusZ, Complex64::new(sigma, 0.0))?.c_minus2();
    let eta_lattice = model_pole_lattice(op, Chart::AMinusZ);
    let zeta_lattice = model_pole_lattice(op, Chart::Az);
    let up = |w: Complex64| spectral_cut_zeta(op, CutDirection::Up, w);
    let down = |w: Complex64| spectral_cut_zeta(op, CutDirection::Down, w);
    let cut = cut_c2(
        |w| {
            let u = up(-w)?;
            let d = down(-w)?;
            Ok(u - (u - d) / (1.0 - (-I * PI * w).exp()))
        },
        sigma,
        &eta_lattice,
    )?;
    let cut_difference = cut_c2(|w| Ok(down(w)? - up(w)?), sigma, &zeta_lattice)?;
    let wres = match scaled_wres_of_sign_power(op, sigma) {
        Ok(v) => Some(v),
        Err(Error::NoTorusSymbol(_)) => None,
        Err(e) => return Err(e),
    };
    let mut discrepancy = (eta - cut).norm();
    if sigma == 0.0 {
        discrepancy = discrepancy.max((eta - cut_difference).norm());
    }
    if let Some(w) = wres {
        discrepancy = discrepancy.max((eta - w).norm());
    }
    Ok(ResidueIdentityReport {
        sigma,
        eta,
        cut,
        cut_difference,
        wres,
        discrepancy,
        tolerance: tol,
        pass: discrepancy < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{make_model, ModelKind};

    #[test]
    fn dirac_tensor_all_zero_at_origin() {
        let op = make_model(ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(0.25))).unwrap();
        let r = residue_identity_check(&op, 0.0, 1e-8).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.eta.norm() < 1e-8 && r.wres.unwrap().norm() < 1e-12);
    }

    #[test]
    fn positive_tensor_at_one() {
        let op = make_model(ModelKind::tensor(ModelKind::abs_circle_dirac(0.3), ModelKind::abs_circle_dirac(0.5))).unwrap();
        let r = residue_identity_check(&op, 1.0, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.eta - 4.0).norm() < 1e-6);
        // the plain cut difference vanishes for positive operators
        assert!(r.cut_difference.norm() < 1e-12);
    }

    #[test]
    fn oscillator_has_no_bridge() {
        let op = make_model(ModelKind::HarmonicOscillator { n: 1 }).unwrap();
        let r = residue_identity_check(&op, 0.0, 1e-8).unwrap();
        assert!(r.wres.is_none());
    }
}
