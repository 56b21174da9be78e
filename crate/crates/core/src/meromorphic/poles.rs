use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::laurent::{laurent_at, LaurentExpansion, DEFAULT_NODES};
use super::zeta::{eta, spectral_cut_zeta, CutDirection};
use crate::spectra::{ModelKind, SpectralOperator};
use crate::{Error, Result};

/// Variable in which a ζ pole table is written: `Tr A^z` or `Tr A^{-z}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chart {
    #[serde(rename = "A^z")]
    Az,
    #[serde(rename = "A^-z")]
    AMinusZ,
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::Az => "A^z",
            Chart::AMinusZ => "A^-z",
        })
    }
}

/// Spectral function tabulated by [`poles_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralFunction {
    Zeta,
    Eta,
}

/// Closed rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min <= re_max && im_min <= im_max) {
            return Err(Error::Parameter("empty window".into()));
        }
        Ok(Window {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleEntry {
    #[serde(with = "crate::report::complex_pair")]
    pub z: Complex64,
    pub order: u8,
    #[serde(with = "crate::report::complex_pair")]
    pub c2: Complex64,
    #[serde(with = "crate::report::complex_pair")]
    pub c1: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleReport {
    pub chart: Chart,
    pub entries: Vec<PoleEntry>,
}

impl PoleReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "chart,re_z,im_z,order,re_c2,im_c2,re_c1,im_c1")?;
        for e in &self.entries {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{}",
                self.chart, e.z.re, e.z.im, e.order, e.c2.re, e.c2.im, e.c1.re, e.c1.im
            )?;
        }
        Ok(())
    }

    pub fn entry_near(&self, z: Complex64) -> Option<&PoleEntry> {
        self.entries.iter().find(|e| (e.z - z).norm() < 1e-9)
    }
}

/// `(effective dimension, order)` of every one-factor piece with a pole lattice.
fn factor_data(kind: &ModelKind, out: &mut Vec<(f64, f64)>) {
    match kind {
        ModelKind::CircleDirac { power, .. } | ModelKind::AbsCircleDirac { power, .. } => {
            if *power != 0.0 {
                out.push((1.0, *power));
            }
        }
        ModelKind::TorusLaplacianShift { .. } => out.push((1.0, 2.0)),
        ModelKind::HarmonicOscillator { n } => out.push((2.0 * *n as f64, 2.0)),
        ModelKind::FiniteRankProjection { .. } => {}
        ModelKind::Tensor(a, b) => {
            factor_data(a, out);
            factor_data(b, out);
        }
        ModelKind::Negated(a) => factor_data(a, out),
    }
}

/// Predicted poles of each factor with real part in `[re_lo, re_hi]`:
/// `(n - j)/m`, `j >= 0`, in the `A^{-z}` chart and their negatives in the
/// `A^z` chart (`n` is the effective dimension, `m` the order).
pub fn predicted_poles(op: &SpectralOperator, chart: Chart, re_lo: f64, re_hi: f64) -> Vec<Complex64> {
    let mut data = Vec::new();
    factor_data(op.kind(), &mut data);
    let mut out: Vec<Complex64> = Vec::new();
    for (n, m) in data {
        // in the A^{-z} chart the poles sit at (n - j)/m
        let mut j = 0usize;
        loop {
            let w = (n - j as f64) / m;
            let z = match chart {
                Chart::AMinusZ => w,
                Chart::Az => -w,
            };
            let outside_forever = match (chart, m > 0.0) {
                (Chart::AMinusZ, true) | (Chart::Az, false) => z < re_lo,
                _ => z > re_hi,
            };
            if outside_forever || j > 10_000 {
                break;
            }
            if z >= re_lo && z <= re_hi && !out.iter().any(|p| (p.re - z).abs() < 1e-12) {
                out.push(Complex64::new(z, 0.0));
            }
            j += 1;
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re));
    out
}

pub(crate) fn model_pole_lattice(op: &SpectralOperator, chart: Chart) -> Vec<Complex64> {
    predicted_poles(op, chart, -64.0, 64.0)
}

/// Default contour radius at `z0`: half the distance to the nearest other
/// candidate, at most `1/2`.
pub(crate) fn laurent_radius(z0: Complex64, lattice: &[Complex64]) -> f64 {
    lattice
        .iter()
        .map(|p| (p - z0).norm())
        .filter(|d| *d > 1e-9)
        .fold(1.0, f64::min)
        * 0.5
}

fn function_value(op: &SpectralOperator, function: SpectralFunction, chart: Chart, w: Complex64) -> Result<Complex64> {
    match (function, chart) {
        (SpectralFunction::Zeta, Chart::Az) => spectral_cut_zeta(op, CutDirection::Up, w),
        (SpectralFunction::Zeta, Chart::AMinusZ) => spectral_cut_zeta(op, CutDirection::Up, -w),
        (SpectralFunction::Eta, _) => eta(op, w),
    }
}

/// Laurent expansion of the tabulated function at `z0`, in the chart variable.
pub fn laurent_in_chart(
    op: &SpectralOperator,
    function: SpectralFunction,
    chart: Chart,
    z0: Complex64,
) -> Result<LaurentExpansion> {
    laurent_in_chart_with(op, function, chart, z0, DEFAULT_NODES)
}

pub fn laurent_in_chart_with(
    op: &SpectralOperator,
    function: SpectralFunction,
    chart: Chart,
    z0: Complex64,
    nodes: usize,
) -> Result<LaurentExpansion> {
    let chart = effective_chart(function, chart);
    let lattice = model_pole_lattice(op, chart);
    let radius = laurent_radius(z0, &lattice);
    laurent_at(
        |w| match function_value(op, function, chart, w) {
            Err(Error::Pole { laurent, .. }) => Ok(laurent.c0()),
            other => other,
        },
        z0,
        radius,
        nodes,
        2,
    )
}

/// η lives naturally in the `A^{-z}` variable.
fn effective_chart(function: SpectralFunction, chart: Chart) -> Chart {
    match function {
        SpectralFunction::Eta => Chart::AMinusZ,
        SpectralFunction::Zeta => chart,
    }
}

/// Poles of ζ (or η) inside `window`, found by Laurent extraction at the
/// predicted lattice points.
pub fn poles_table(
    op: &SpectralOperator,
    function: SpectralFunction,
    chart: Chart,
    window: &Window,
    tol: f64,
) -> Result<PoleReport> {
    poles_table_with(op, function, chart, window, tol, DEFAULT_NODES)
}

pub fn poles_table_with(
    op: &SpectralOperator,
    function: SpectralFunction,
    chart: Chart,
    window: &Window,
    tol: f64,
    nodes: usize,
) -> Result<PoleReport> {
    let chart = effective_chart(function, chart);
    let candidates: Vec<Complex64> = predicted_poles(op, chart, window.re_min, window.re_max)
        .into_iter()
        .filter(|z| window.contains(*z))
        .collect();
    let mut entries = Vec::new();
    for z in candidates {
        let l = laurent_in_chart_with(op, function, chart, z, nodes)?;
        let (c2, c1) = (l.c_minus2(), l.c_minus1());
        let order = if c2.norm() > tol {
            2
        } else if c1.norm() > tol {
            1
        } else {
            continue;
        };
        entries.push(PoleEntry { z, order, c2, c1 });
    }
    Ok(PoleReport { chart, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::make_model;

    fn window() -> Window {
        Window::new(-3.5, 3.5, -0.5, 0.5).unwrap()
    }

    #[test]
    fn abs_dirac_has_single_simple_pole() {
        let op = make_model(ModelKind::abs_circle_dirac(0.5)).unwrap();
        let r = poles_table(&op, SpectralFunction::Zeta, Chart::Az, &window(), 1e-8).unwrap();
        assert_eq!(r.entries.len(), 1);
        let e = &r.entries[0];
        assert!((e.z.re + 1.0).abs() < 1e-12);
        assert_eq!(e.order, 1);
        assert!((e.c1 + 2.0).norm() < 1e-9);
    }

    #[test]
    fn chart_flip_changes_residue_sign() {
        let op = make_model(ModelKind::abs_circle_dirac(0.5)).unwrap();
        let r = poles_table(&op, SpectralFunction::Zeta, Chart::AMinusZ, &window(), 1e-8).unwrap();
        let e = r.entry_near(Complex64::new(1.0, 0.0)).unwrap();
        assert!((e.c1 - 2.0).norm() < 1e-9);
    }

    #[test]
    fn predicted_lattice_for_mixed_orders() {
        let op = make_model(ModelKind::tensor(
            ModelKind::abs_circle_dirac(0.5),
            ModelKind::AbsCircleDirac { a: 0.5, power: 2.0 },
        ))
        .unwrap();
        let p = predicted_poles(&op, Chart::AMinusZ, 0.0, 1.0);
        let res: Vec<f64> = p.iter().map(|z| z.re).collect();
        assert_eq!(res, vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn report_json_shape() {
        let op = make_model(ModelKind::abs_circle_dirac(0.5)).unwrap();
        let r = poles_table(&op, SpectralFunction::Zeta, Chart::Az, &window(), 1e-8).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["chart"], "A^z");
        assert_eq!(v["entries"][0]["order"], 1);
        assert!(v["entries"][0]["z"].as_array().unwrap().len() == 2);
    }
}
