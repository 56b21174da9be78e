//! Wodzicki residues on `T¹ × T¹`: the spectral definition through the
//! double ζ-function, the cosphere quadrature of the `(-1, -1)` component,
//! restricted traces and the residue identities built on them.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::meromorphic::{diagonal_double_zeta, hurwitz_zeta, laurent_at, laurent_in_chart, Chart, SpectralFunction};
use crate::spectra::{exact_symbol_with, ModelKind, SpectralOperator};
use crate::symbolcore::{compose, ClassicalBisingularSymbol, ExactTerm, Grid, DEFAULT_DEPTH, DEFAULT_GRID};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Spectral,
    Quadrature,
    /// Closed-form evaluation on exact multiplier terms.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueResult {
    pub value: Complex64,
    pub route: Route,
    pub k: u8,
    /// Error estimate of `value`.
    pub certificate: f64,
}

/// Component index `j` with `m - j = -1`, if the order admits one.
fn residue_index(m: Complex64) -> Option<usize> {
    let j = m.re + 1.0;
    (m.im == 0.0 && j >= 0.0 && j == j.round()).then_some(j as usize)
}

/// `Res^k` at `z = 0` of `Tr(A · Q₁^{-z} ⊗ Q₂^{-z})` for the constant family `A`.
pub fn wres_spectral(
    a: &SpectralOperator,
    q1: &SpectralOperator,
    q2: &SpectralOperator,
    k: u8,
) -> Result<ResidueResult> {
    if !(k == 1 || k == 2) {
        return Err(Error::Parameter(format!("residue index k = {k} must be 1 or 2")));
    }
    let order = a.order();
    // poles of each factor sit at 1 + m - n, n >= 0
    let mut radius: f64 = 0.4;
    for m in [order.m1.re, order.m2.re] {
        let f = (1.0 + m).rem_euclid(1.0);
        let d = f.min(1.0 - f);
        if d > 1e-9 {
            radius = radius.min(0.5 * d);
        }
    }
    let l = laurent_at(
        |z| match diagonal_double_zeta(a, q1, q2, z) {
            Err(Error::Pole { laurent, .. }) => Ok(laurent.c0()),
            other => other,
        },
        ZERO,
        radius,
        256,
        2,
    )?;
    Ok(ResidueResult {
        value: l.residue(k as u32),
        route: Route::Spectral,
        k,
        certificate: l.error_bound,
    })
}

/// `Wres²(a) = (2π)^{-2} ∫_{S*T¹ × S*T¹} σ^{-1,-1}(a)` by the trapezoidal rule
/// in `θ₁, θ₂` and the exact sum over `ω₁, ω₂`.
///
/// Symbols carrying exact multiplier terms are evaluated in closed form
/// (after merging equal terms), so commutators of multipliers give exactly 0.
pub fn wres2_quadrature(a: &ClassicalBisingularSymbol) -> Result<ResidueResult> {
    if let Some(terms) = a.exact_terms() {
        return Ok(ResidueResult {
            value: exact_wres2(terms),
            route: Route::Exact,
            k: 2,
            certificate: 0.0,
        });
    }
    let order = a.order();
    let (Some(j), Some(k)) = (residue_index(order.m1), residue_index(order.m2)) else {
        return Ok(ResidueResult {
            value: ZERO,
            route: Route::Quadrature,
            k: 2,
            certificate: 0.0,
        });
    };
    let (d1, d2) = a.depth();
    if j > d1 || k > d2 {
        return Err(Error::Order(format!(
            "component of bi-degree (-1, -1) is ({j}, {k}) but the expansion stops at ({d1}, {d2})"
        )));
    }
    let grid = a.grid();
    let c = a.component(j, k)?;
    let full = cosphere_integral(&grid, c, 1);
    let coarse = cosphere_integral(&grid, c, 2);
    Ok(ResidueResult {
        value: full,
        route: Route::Quadrature,
        k: 2,
        certificate: (full - coarse).norm(),
    })
}

/// `Σ_ω` of the `θ`-mean using every `stride`-th angle.
fn cosphere_integral(grid: &Grid, values: &[Complex64], stride: usize) -> Complex64 {
    let mut acc = ZERO;
    let mut count = 0usize;
    for i1 in (0..grid.n1).step_by(stride) {
        for i2 in (0..grid.n2).step_by(stride) {
            for w1 in 0..2 {
                for w2 in 0..2 {
                    acc += values[grid.index(i1, w1, i2, w2)];
                }
            }
            count += 1;
        }
    }
    acc / count as f64
}

/// Sum the coefficients of identical terms.
pub(crate) fn merge_terms(terms: &[ExactTerm]) -> Vec<ExactTerm> {
    let mut out: Vec<ExactTerm> = Vec::new();
    for t in terms {
        match out.iter_mut().find(|u| u.base == t.base && u.factors == t.factors) {
            Some(u) => u.coeff += t.coeff,
            None => out.push(t.clone()),
        }
    }
    out
}

fn exact_wres2(terms: &[ExactTerm]) -> Complex64 {
    let mut acc = ZERO;
    for t in merge_terms(terms) {
        if t.coeff == ZERO {
            continue;
        }
        let mut prod = t.coeff * t.base_mean();
        for f in &t.factors {
            let Some(j) = residue_index(f.degree()) else {
                prod = ZERO;
                break;
            };
            prod *= f.expansion(1.0, j + 1)[j] + f.expansion(-1.0, j + 1)[j];
        }
        acc += prod;
    }
    acc
}

/// `Σ_{q∈ℤ} max(|q|,1)^d` split by the sign of `q` (`sign 0 = +1`): `(1 + ζ(-d), ζ(-d))`.
fn excised_lattice_sums(d: Complex64) -> Result<(Complex64, Complex64)> {
    let z = hurwitz_zeta(-d, 1.0)?;
    Ok((1.0 + z, z))
}

/// Restricted trace `Tr₁` (`factor = 1`) or `Tr₂` of a symbol whose opposite
/// leg is trace class (order `<= -2`). The inner trace is the trace of the
/// excised quantization `Σ_q s(θ, q)` of the leg, summed in closed form.
pub fn restricted_trace(a: &ClassicalBisingularSymbol, factor: u8) -> Result<Complex64> {
    let order = a.order();
    let (m_here, m_leg) = match factor {
        1 => (order.m1, order.m2),
        2 => (order.m2, order.m1),
        _ => return Err(Error::Parameter(format!("factor {factor} must be 1 or 2"))),
    };
    if m_leg.re > -2.0 {
        return Err(Error::Domain(format!(
            "leg of order {m_leg} is not trace class on the circle (needs order <= -2)"
        )));
    }
    let Some(j) = residue_index(m_here) else {
        return Ok(ZERO);
    };
    let (d1, d2) = a.depth();
    let (depth_here, depth_leg) = if factor == 1 { (d1, d2) } else { (d2, d1) };
    if j > depth_here {
        return Err(Error::Order(format!(
            "component of degree -1 is {j} but the expansion stops at {depth_here}"
        )));
    }
    let grid = a.grid();
    let mut acc = ZERO;
    for k in 0..=depth_leg {
        let (c, d) = if factor == 1 {
            (a.component(j, k)?, a.degree(j, k).1)
        } else {
            (a.component(k, j)?, a.degree(k, j).0)
        };
        let (plus, minus) = excised_lattice_sums(d)?;
        for idx in 0..grid.len() {
            let (_, w1, _, w2) = grid.split(idx);
            let w_leg = if factor == 1 { w2 } else { w1 };
            acc += c[idx] * if w_leg == 0 { plus } else { minus };
        }
    }
    // Σ_ω mean over θ of the cosphere factor, mean over θ on the leg
    Ok(acc / (grid.n1 * grid.n2) as f64)
}

/// Operator on the trace-class leg of a [`LegFactoredSymbol`].
#[derive(Clone, Debug, PartialEq)]
pub enum LegOperator {
    /// Matrix on the Fourier modes `-M..=M`.
    Modes(DMatrix<Complex64>),
}

impl LegOperator {
    pub fn trace(&self) -> Complex64 {
        match self {
            LegOperator::Modes(m) => m.trace(),
        }
    }

    /// `‖P² - P‖` in the max norm.
    pub fn idempotent_defect(&self) -> f64 {
        match self {
            LegOperator::Modes(m) => (m * m - m).iter().map(|v| v.norm()).fold(0.0, f64::max),
        }
    }

    /// Orthogonal projection onto the mode `q` of a `(2M+1)`-dimensional mode space.
    pub fn rank_one_mode(modes: i64, q: i64) -> Self {
        let size = (2 * modes + 1) as usize;
        let mut m = DMatrix::from_element(size, size, ZERO);
        let i = (q + modes) as usize;
        m[(i, i)] = Complex64::new(1.0, 0.0);
        LegOperator::Modes(m)
    }
}

/// `op(c) ⊗ L`: a classical one-factor symbol on `factor` tensored with a
/// smoothing operator `L` on the other circle.
#[derive(Clone, Debug, PartialEq)]
pub struct LegFactoredSymbol {
    pub factor: u8,
    pub order: f64,
    pub n: usize,
    /// `components[j]` holds the degree `order - j` component on `n × {±1}`,
    /// indexed `2 i + w`.
    pub components: Vec<Vec<Complex64>>,
    pub leg: LegOperator,
}

impl LegFactoredSymbol {
    pub fn from_fn(
        factor: u8,
        order: f64,
        n: usize,
        depth: usize,
        leg: LegOperator,
        f: impl Fn(usize, f64, f64) -> Complex64,
    ) -> Result<Self> {
        crate::symbolcore::check_grid_size(n)?;
        let components = (0..=depth)
            .map(|j| {
                (0..2 * n)
                    .map(|s| {
                        let theta = std::f64::consts::TAU * (s / 2) as f64 / n as f64;
                        f(j, theta, if s % 2 == 0 { 1.0 } else { -1.0 })
                    })
                    .collect()
            })
            .collect();
        Ok(LegFactoredSymbol {
            factor,
            order,
            n,
            components,
            leg,
        })
    }

    /// Component of degree `-1` on the classical factor, if present.
    fn residue_component(&self) -> Result<Option<&[Complex64]>> {
        match residue_index(Complex64::new(self.order, 0.0)) {
            None => Ok(None),
            Some(j) if j < self.components.len() => Ok(Some(&self.components[j])),
            Some(j) => Err(Error::Order(format!(
                "component of degree -1 is {j} but the expansion stops at {}",
                self.components.len() - 1
            ))),
        }
    }
}

/// Restricted trace of a leg-factored symbol: `(2π)^{-1}∫ c_{-1} · Tr L`.
pub fn restricted_trace_factored(a: &LegFactoredSymbol) -> Result<Complex64> {
    let Some(c) = a.residue_component()? else {
        return Ok(ZERO);
    };
    let mean = c.iter().sum::<Complex64>() / a.n as f64;
    Ok(mean * a.leg.trace())
}

/// `Wres²(a ∘ b - b ∘ a)`; expected to vanish.
pub fn commutator_residue(a: &ClassicalBisingularSymbol, b: &ClassicalBisingularSymbol) -> Result<ResidueResult> {
    let depth = (a.depth().0.min(b.depth().0), a.depth().1.min(b.depth().1));
    let ab = compose(a, b, depth)?;
    let ba = compose(b, a, depth)?;
    wres2_quadrature(&ab.sub(&ba)?)
}

/// Input to [`projection_residue`].
#[derive(Clone, Debug)]
pub enum ProjectionInput {
    Symbol(ClassicalBisingularSymbol),
    /// Spectral projection of `op` onto its `modes` eigenvalues of smallest modulus.
    FiniteRank { op: SpectralOperator, modes: usize },
    Leg(LegFactoredSymbol),
}

pub const IDEMPOTENT_TOLERANCE: f64 = 1e-8;

/// `Wres²(p)` of an idempotent.
pub fn projection_residue(p: &ProjectionInput) -> Result<ResidueResult> {
    match p {
        ProjectionInput::Symbol(s) => {
            let sq = compose(s, s, s.depth())?;
            let defect = sq.sub(s)?.sup_norm();
            if defect > IDEMPOTENT_TOLERANCE {
                return Err(Error::Precondition(format!("p ∘ p - p has size {defect:.3e}")));
            }
            wres2_quadrature(s)
        }
        ProjectionInput::FiniteRank { op, modes } => {
            let data = op.eigenvalues(*modes)?;
            let mut taken = 0u64;
            let mut kept = Vec::new();
            for d in data {
                if taken >= *modes as u64 {
                    break;
                }
                if taken + d.multiplicity > *modes as u64 {
                    return Err(Error::Precondition(format!(
                        "{modes} modes split the eigenspace of {}",
                        d.value
                    )));
                }
                taken += d.multiplicity;
                kept.push(d);
            }
            // smoothing: every classical component vanishes. The spectral
            // side Σ_P |λ|^{-z} is entire; its extracted residue certifies that.
            let l = laurent_at(
                |z| {
                    Ok(kept
                        .iter()
                        .map(|d| d.multiplicity as f64 * Complex64::new(d.value.abs(), 0.0).powc(-z))
                        .sum())
                },
                ZERO,
                0.5,
                128,
                2,
            )?;
            Ok(ResidueResult {
                value: ZERO,
                route: Route::Quadrature,
                k: 2,
                certificate: l.c_minus2().norm().max(l.error_bound),
            })
        }
        ProjectionInput::Leg(s) => {
            let defect = s.leg.idempotent_defect();
            if defect > IDEMPOTENT_TOLERANCE {
                return Err(Error::Precondition(format!("leg P² - P has size {defect:.3e}")));
            }
            // the smoothing leg has no classical components at all
            Ok(ResidueResult {
                value: ZERO,
                route: Route::Quadrature,
                k: 2,
                certificate: 0.0,
            })
        }
    }
}

/// Model of `F|A|^{s}` for a torus multiplier model `A`.
pub fn signed_power_model(kind: &ModelKind, s: f64) -> ModelKind {
    match kind {
        ModelKind::CircleDirac { a, power } => ModelKind::CircleDirac { a: *a, power: power * s },
        ModelKind::AbsCircleDirac { a, power } => ModelKind::AbsCircleDirac { a: *a, power: power * s },
        ModelKind::Tensor(x, y) => ModelKind::tensor(signed_power_model(x, s), signed_power_model(y, s)),
        ModelKind::Negated(x) => ModelKind::negated(signed_power_model(x, s)),
        other => other.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EtaResidueComparison {
    pub sigma: f64,
    /// `Res²_{z=σ} η(A, z)`.
    pub lhs: Complex64,
    /// `m₁m₂ · Wres²(F|A|^{-σ})`.
    pub rhs: Complex64,
    pub discrepancy: f64,
}

/// Compare `Res²_{z=σ} η(A, z)` with `m₁m₂ · Wres²(F|A|^{-σ})`.
pub fn eta_residue_via_wres(op: &SpectralOperator, sigma: f64) -> Result<EtaResidueComparison> {
    let lhs = laurent_in_chart(op, SpectralFunction::Eta, Chart::AMinusZ, Complex64::new(sigma, 0.0))?.c_minus2();
    let rhs = scaled_wres_of_sign_power(op, sigma)?;
    Ok(EtaResidueComparison {
        sigma,
        lhs,
        rhs,
        discrepancy: (lhs - rhs).norm(),
    })
}

/// `m₁m₂ · Wres²(F|A|^{-σ})` through the exact symbol of the model.
pub(crate) fn scaled_wres_of_sign_power(op: &SpectralOperator, sigma: f64) -> Result<Complex64> {
    let order = op.order();
    let power = SpectralOperator::new(signed_power_model(op.kind(), -sigma))?;
    let sym = exact_symbol_with(&power, Grid::square(DEFAULT_GRID)?, DEFAULT_DEPTH)?;
    Ok(order.m1 * order.m2 * wres2_quadrature(&sym)?.value)
}
