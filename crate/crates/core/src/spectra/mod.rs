//! Model operators with explicitly enumerable spectra.
//!
//! Every model is self-adjoint. Spectra of one-factor models live on a single
//! circle (or on `ℝⁿ` for the harmonic oscillator); tensor products act on
//! the product space with product eigenvalues and product multiplicities.

mod symbol;

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::symbolcore::BiOrder;
use crate::{Error, Result};

pub use symbol::{exact_symbol, exact_symbol_with, multiplier_symbol, CircleFactor, ExactTerm};
pub(crate) use symbol::multiplier_factors;

/// Model descriptor, serialized as `{"kind": ..., "params": ...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum ModelKind {
    /// `D_a^{(p)}`: eigenvalues `sign(k + a)|k + a|^p`, `k ∈ ℤ`.
    CircleDirac {
        a: f64,
        #[serde(default = "unit_power")]
        power: f64,
    },
    /// `|D_a|^p`: eigenvalues `|k + a|^p`, `k ∈ ℤ`. Power 0 is the identity.
    AbsCircleDirac {
        a: f64,
        #[serde(default = "unit_power")]
        power: f64,
    },
    /// `-∂² + c` on the circle: eigenvalues `k² + c`.
    TorusLaplacianShift { c: f64 },
    /// `-Δ + |x|²` on `ℝⁿ`: eigenvalue `2k + n` with multiplicity `C(k+n-1, n-1)`.
    HarmonicOscillator { n: u32 },
    /// Orthogonal projection of rank `rank`; the kernel is not enumerated.
    FiniteRankProjection { rank: u64 },
    Tensor(Box<ModelKind>, Box<ModelKind>),
    Negated(Box<ModelKind>),
}

fn unit_power() -> f64 {
    1.0
}

impl ModelKind {
    pub fn circle_dirac(a: f64) -> Self {
        ModelKind::CircleDirac { a, power: 1.0 }
    }

    pub fn abs_circle_dirac(a: f64) -> Self {
        ModelKind::AbsCircleDirac { a, power: 1.0 }
    }

    pub fn tensor(a: ModelKind, b: ModelKind) -> Self {
        ModelKind::Tensor(Box::new(a), Box::new(b))
    }

    pub fn negated(a: ModelKind) -> Self {
        ModelKind::Negated(Box::new(a))
    }
}

/// One eigenvalue with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralDatum {
    pub value: f64,
    pub multiplicity: u64,
    pub sign: i8,
}

impl SpectralDatum {
    fn new(value: f64, multiplicity: u64) -> Self {
        let sign = if value > 0.0 {
            1
        } else if value < 0.0 {
            -1
        } else {
            0
        };
        SpectralDatum {
            value,
            multiplicity,
            sign,
        }
    }
}

/// Dimensions of the two factors the model acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelGeometry {
    pub n1: usize,
    pub n2: usize,
}

/// Validated model operator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModelKind", into = "ModelKind")]
pub struct SpectralOperator {
    kind: ModelKind,
}

impl TryFrom<ModelKind> for SpectralOperator {
    type Error = Error;

    fn try_from(kind: ModelKind) -> Result<Self> {
        SpectralOperator::new(kind)
    }
}

impl From<SpectralOperator> for ModelKind {
    fn from(op: SpectralOperator) -> ModelKind {
        op.kind
    }
}

fn is_integer(a: f64) -> bool {
    a == a.round()
}

fn validate(kind: &ModelKind) -> Result<()> {
    match kind {
        ModelKind::CircleDirac { a, power } | ModelKind::AbsCircleDirac { a, power } => {
            if !a.is_finite() || !power.is_finite() {
                return Err(Error::Parameter("circle model parameters must be finite".into()));
            }
            if is_integer(*a) {
                return Err(Error::NonInvertible(format!("circle model with integer shift a = {a}")));
            }
            Ok(())
        }
        ModelKind::TorusLaplacianShift { c } => {
            if !c.is_finite() {
                return Err(Error::Parameter("shift must be finite".into()));
            }
            if *c <= 0.0 {
                return Err(Error::NonInvertible(format!("laplacian shift c = {c} must be positive")));
            }
            Ok(())
        }
        ModelKind::HarmonicOscillator { n } => {
            if *n == 0 {
                return Err(Error::Parameter("oscillator dimension must be >= 1".into()));
            }
            Ok(())
        }
        ModelKind::FiniteRankProjection { .. } => Ok(()),
        ModelKind::Tensor(a, b) => {
            validate(a)?;
            validate(b)
        }
        ModelKind::Negated(a) => validate(a),
    }
}

/// Build a validated model from a descriptor.
pub fn make_model(kind: ModelKind) -> Result<SpectralOperator> {
    SpectralOperator::new(kind)
}

impl SpectralOperator {
    pub fn new(kind: ModelKind) -> Result<Self> {
        validate(&kind)?;
        Ok(SpectralOperator { kind })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.kind)?)
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    /// Sub-operators of a tensor product.
    pub fn factors(&self) -> Option<(SpectralOperator, SpectralOperator)> {
        match &self.kind {
            ModelKind::Tensor(a, b) => Some((
                SpectralOperator { kind: (**a).clone() },
                SpectralOperator { kind: (**b).clone() },
            )),
            _ => None,
        }
    }

    /// Bi-order; one-factor operators carry `(m, 0)`.
    pub fn order(&self) -> BiOrder {
        match &self.kind {
            ModelKind::Tensor(a, b) => {
                let oa = SpectralOperator { kind: (**a).clone() }.order();
                let ob = SpectralOperator { kind: (**b).clone() }.order();
                BiOrder::complex(oa.m1, ob.m1)
            }
            ModelKind::Negated(a) => SpectralOperator { kind: (**a).clone() }.order(),
            other => BiOrder::new(single_order(other), 0.0),
        }
    }

    pub fn geometry(&self) -> ModelGeometry {
        match &self.kind {
            ModelKind::Tensor(a, b) => ModelGeometry {
                n1: single_dim(a),
                n2: single_dim(b),
            },
            ModelKind::Negated(a) => SpectralOperator { kind: (**a).clone() }.geometry(),
            other => ModelGeometry {
                n1: single_dim(other),
                n2: 0,
            },
        }
    }

    pub fn is_self_adjoint(&self) -> bool {
        true
    }

    /// Elliptic in the sense of positive order with discrete spectrum.
    pub fn is_elliptic(&self) -> bool {
        match &self.kind {
            ModelKind::FiniteRankProjection { .. } => false,
            ModelKind::Tensor(a, b) => {
                SpectralOperator { kind: (**a).clone() }.is_elliptic()
                    && SpectralOperator { kind: (**b).clone() }.is_elliptic()
            }
            ModelKind::Negated(a) => SpectralOperator { kind: (**a).clone() }.is_elliptic(),
            other => single_order(other) > 0.0,
        }
    }

    pub fn is_invertible(&self) -> bool {
        !contains_projection(&self.kind)
    }

    /// True when every eigenvalue is positive.
    pub fn is_positive(&self) -> bool {
        positivity(&self.kind) == Some(true)
    }

    /// All eigenvalues with `|λ| <= bound`, merged and ordered.
    pub fn spectrum_up_to(&self, bound: f64) -> Result<Vec<SpectralDatum>> {
        let mut raw = Vec::new();
        collect(&self.kind, bound, &mut raw)?;
        Ok(merge(raw))
    }

    /// First `count` eigenvalues in `|λ|` order (ties by value ascending).
    pub fn eigenvalues(&self, count: usize) -> Result<Vec<SpectralDatum>> {
        if count == 0 {
            return Err(Error::Parameter("count must be >= 1".into()));
        }
        if let ModelKind::FiniteRankProjection { rank } = self.kind {
            if rank == 0 {
                return Ok(Vec::new());
            }
        }
        let mut bound = 2.0 * min_abs(&self.kind)?.max(1e-3);
        loop {
            let data = self.spectrum_up_to(bound)?;
            if data.len() >= count || bound > 1e12 || is_finite_spectrum(&self.kind) {
                return Ok(data.into_iter().take(count).collect());
            }
            bound *= 2.0;
        }
    }
}

fn single_order(kind: &ModelKind) -> f64 {
    match kind {
        ModelKind::CircleDirac { power, .. } | ModelKind::AbsCircleDirac { power, .. } => *power,
        ModelKind::TorusLaplacianShift { .. } | ModelKind::HarmonicOscillator { .. } => 2.0,
        ModelKind::FiniteRankProjection { .. } => f64::NEG_INFINITY,
        ModelKind::Negated(a) => single_order(a),
        ModelKind::Tensor(..) => f64::NAN,
    }
}

/// Dimension of the space a one-factor model acts on. The oscillator counts
/// as dimension `n`; its pole lattice uses the phase-space dimension `2n`.
fn single_dim(kind: &ModelKind) -> usize {
    match kind {
        ModelKind::HarmonicOscillator { n } => *n as usize,
        ModelKind::Negated(a) => single_dim(a),
        _ => 1,
    }
}

fn contains_projection(kind: &ModelKind) -> bool {
    match kind {
        ModelKind::FiniteRankProjection { .. } => true,
        ModelKind::Tensor(a, b) => contains_projection(a) || contains_projection(b),
        ModelKind::Negated(a) => contains_projection(a),
        _ => false,
    }
}

fn is_finite_spectrum(kind: &ModelKind) -> bool {
    match kind {
        ModelKind::FiniteRankProjection { .. } => true,
        ModelKind::Tensor(a, b) => is_finite_spectrum(a) && is_finite_spectrum(b),
        ModelKind::Negated(a) => is_finite_spectrum(a),
        _ => false,
    }
}

fn positivity(kind: &ModelKind) -> Option<bool> {
    match kind {
        ModelKind::CircleDirac { .. } => Some(false),
        ModelKind::AbsCircleDirac { .. }
        | ModelKind::TorusLaplacianShift { .. }
        | ModelKind::HarmonicOscillator { .. }
        | ModelKind::FiniteRankProjection { .. } => Some(true),
        ModelKind::Tensor(a, b) => Some(positivity(a)? && positivity(b)?),
        ModelKind::Negated(_) => Some(false),
    }
}

fn min_abs(kind: &ModelKind) -> Result<f64> {
    Ok(match kind {
        ModelKind::CircleDirac { a, power } | ModelKind::AbsCircleDirac { a, power } => {
            let f = a - a.floor();
            f.min(1.0 - f).powf(*power)
        }
        ModelKind::TorusLaplacianShift { c } => *c,
        ModelKind::HarmonicOscillator { n } => *n as f64,
        ModelKind::FiniteRankProjection { .. } => 1.0,
        ModelKind::Tensor(a, b) => min_abs(a)? * min_abs(b)?,
        ModelKind::Negated(a) => min_abs(a)?,
    })
}

fn collect(kind: &ModelKind, bound: f64, out: &mut Vec<SpectralDatum>) -> Result<()> {
    match kind {
        ModelKind::CircleDirac { a, power } | ModelKind::AbsCircleDirac { a, power } => {
            if *power <= 0.0 {
                return Err(Error::Unsupported(format!(
                    "enumeration needs a positive order, got power {power}"
                )));
            }
            let signed = matches!(kind, ModelKind::CircleDirac { .. });
            let r = bound.powf(1.0 / power);
            let lo = (-r - a).ceil() as i64;
            let hi = (r - a).floor() as i64;
            for k in lo..=hi {
                let x = k as f64 + a;
                let mag = x.abs().powf(*power);
                if mag <= bound {
                    let v = if signed { x.signum() * mag } else { mag };
                    out.push(SpectralDatum::new(v, 1));
                }
            }
        }
        ModelKind::TorusLaplacianShift { c } => {
            if bound >= *c {
                let kmax = (bound - c).sqrt().floor() as u64;
                out.push(SpectralDatum::new(*c, 1));
                for k in 1..=kmax {
                    out.push(SpectralDatum::new((k * k) as f64 + c, 2));
                }
            }
        }
        ModelKind::HarmonicOscillator { n } => {
            let mut k = 0u64;
            loop {
                let v = (2 * k + *n as u64) as f64;
                if v > bound {
                    break;
                }
                out.push(SpectralDatum::new(v, binomial(k + *n as u64 - 1, *n as u64 - 1)));
                k += 1;
            }
        }
        ModelKind::FiniteRankProjection { rank } => {
            if *rank > 0 && bound >= 1.0 {
                out.push(SpectralDatum::new(1.0, *rank));
            }
        }
        ModelKind::Tensor(a, b) => {
            let ma = min_abs(a)?;
            let mb = min_abs(b)?;
            let mut da = Vec::new();
            let mut db = Vec::new();
            collect(a, bound / mb, &mut da)?;
            collect(b, bound / ma, &mut db)?;
            for x in &da {
                for y in &db {
                    let v = x.value * y.value;
                    if v.abs() <= bound {
                        out.push(SpectralDatum::new(v, x.multiplicity * y.multiplicity));
                    }
                }
            }
        }
        ModelKind::Negated(a) => {
            let mut inner = Vec::new();
            collect(a, bound, &mut inner)?;
            out.extend(inner.into_iter().map(|d| SpectralDatum::new(-d.value, d.multiplicity)));
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Sort by `|value|`, then value, and merge values equal to 1e-12 relative.
fn merge(mut raw: Vec<SpectralDatum>) -> Vec<SpectralDatum> {
    raw.sort_by(|x, y| {
        x.value
            .abs()
            .total_cmp(&y.value.abs())
            .then(x.value.total_cmp(&y.value))
    });
    let mut out: Vec<SpectralDatum> = Vec::with_capacity(raw.len());
    for d in raw {
        match out.last_mut() {
            Some(last) if (last.value - d.value).abs() <= 1e-12 * d.value.abs().max(1.0) => {
                last.multiplicity += d.multiplicity;
            }
            _ => out.push(d),
        }
    }
    out
}

/// Spectral filter passing one sign of the spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralFilter {
    Plus,
    Minus,
}

impl SpectralFilter {
    pub fn passes(&self, d: &SpectralDatum) -> bool {
        match self {
            SpectralFilter::Plus => d.sign > 0,
            SpectralFilter::Minus => d.sign < 0,
        }
    }

    pub fn apply(&self, data: &[SpectralDatum]) -> Vec<SpectralDatum> {
        data.iter().copied().filter(|d| self.passes(d)).collect()
    }
}

/// `(Π₊, Π₋)` of a self-adjoint invertible model.
pub fn sign_decomposition(a: &SpectralOperator) -> Result<(SpectralFilter, SpectralFilter)> {
    if !a.is_invertible() {
        return Err(Error::Kernel);
    }
    Ok((SpectralFilter::Plus, SpectralFilter::Minus))
}

/// Spectrum dump with header `value,multiplicity,sign`.
pub fn write_spectrum_csv<W: Write>(mut w: W, data: &[SpectralDatum]) -> Result<()> {
    writeln!(w, "value,multiplicity,sign")?;
    for d in data {
        writeln!(w, "{},{},{}", d.value, d.multiplicity, d.sign)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_dirac_quarter_order() {
        let op = make_model(ModelKind::circle_dirac(0.25)).unwrap();
        let v: Vec<f64> = op.eigenvalues(5).unwrap().iter().map(|d| d.value).collect();
        assert_eq!(v, vec![0.25, -0.75, 1.25, -1.75, 2.25]);
    }

    #[test]
    fn circle_dirac_half_ties_by_value() {
        let op = make_model(ModelKind::circle_dirac(0.5)).unwrap();
        let v: Vec<f64> = op.eigenvalues(4).unwrap().iter().map(|d| d.value).collect();
        assert_eq!(v, vec![-0.5, 0.5, -1.5, 1.5]);
    }

    #[test]
    fn integer_shift_is_rejected() {
        assert!(matches!(
            make_model(ModelKind::circle_dirac(1.0)),
            Err(Error::NonInvertible(_))
        ));
    }

    #[test]
    fn oscillator_spectrum() {
        let op = make_model(ModelKind::HarmonicOscillator { n: 1 }).unwrap();
        let d = op.eigenvalues(100).unwrap();
        assert_eq!(d[0].value, 1.0);
        assert_eq!(d[2].value, 5.0);
        assert_eq!(d.iter().map(|x| x.multiplicity).sum::<u64>(), 100);
        let op3 = make_model(ModelKind::HarmonicOscillator { n: 3 }).unwrap();
        let d3 = op3.eigenvalues(3).unwrap();
        assert_eq!(d3.iter().map(|x| x.multiplicity).collect::<Vec<_>>(), vec![1, 3, 6]);
    }

    #[test]
    fn tensor_of_half_shifts() {
        let m = ModelKind::tensor(ModelKind::abs_circle_dirac(0.5), ModelKind::abs_circle_dirac(0.5));
        let d = make_model(m).unwrap().eigenvalues(1).unwrap();
        assert_eq!(d[0].value, 0.25);
        assert_eq!(d[0].multiplicity, 4);
    }

    #[test]
    fn descriptor_round_trip() {
        let m = ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::abs_circle_dirac(0.5));
        let op = make_model(m).unwrap();
        let text = op.to_json().unwrap();
        assert!(text.contains("\"kind\":\"tensor\""));
        assert_eq!(SpectralOperator::from_json(&text).unwrap(), op);
        let bad = r#"{"kind":"circle_dirac","params":{"a":2.0}}"#;
        assert!(SpectralOperator::from_json(bad).is_err());
    }

    #[test]
    fn projection_has_kernel() {
        let p = make_model(ModelKind::FiniteRankProjection { rank: 3 }).unwrap();
        assert!(matches!(sign_decomposition(&p), Err(Error::Kernel)));
    }

    #[test]
    fn csv_dump() {
        let op = make_model(ModelKind::circle_dirac(0.5)).unwrap();
        let mut buf = Vec::new();
        write_spectrum_csv(&mut buf, &op.eigenvalues(2).unwrap()).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "value,multiplicity,sign\n-0.5,1,-1\n0.5,1,1\n");
    }
}
