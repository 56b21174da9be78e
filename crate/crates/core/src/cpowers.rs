//! Complex powers through resolvent contour integrals, at the level of
//! scalars, symbols and model spectra.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quadrature::{circle_integral, exp_sinh, tanh_sinh};
use crate::spectra::SpectralOperator;
use crate::symbolcore::{
    adjoint, compose, joint_quotient, lambda_elliptic_check, parametrix_components, BiOrder,
    ClassicalBisingularSymbol, CircleFactor, ExactTerm, Sector, ShiftedPower,
};
use crate::{par, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ContourKind {
    /// Boundary of `Λ_ε`, oriented positively with respect to `Λ`.
    Keyhole { sector: Sector },
    Circle { center: Complex64, radius: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Contour {
    pub kind: ContourKind,
    pub nodes: usize,
}

pub const MIN_CONTOUR_NODES: usize = 64;

impl Contour {
    pub fn circle(center: Complex64, radius: f64, nodes: usize) -> Result<Self> {
        if !(radius > 0.0) || nodes < MIN_CONTOUR_NODES {
            return Err(Error::Parameter(format!(
                "circle needs radius > 0 and at least {MIN_CONTOUR_NODES} nodes"
            )));
        }
        Ok(Contour {
            kind: ContourKind::Circle { center, radius },
            nodes,
        })
    }

    pub fn keyhole(sector: Sector) -> Self {
        Contour {
            kind: ContourKind::Keyhole { sector },
            nodes: MIN_CONTOUR_NODES,
        }
    }

    /// Smallest distance from `p` to the contour.
    pub fn margin(&self, p: Complex64) -> f64 {
        match self.kind {
            ContourKind::Circle { center, radius } => ((p - center).norm() - radius).abs(),
            ContourKind::Keyhole { sector } => {
                let mut m = (p.norm() - sector.epsilon).abs();
                for ray in sector.rays() {
                    // distance to the ray {t·ray : t >= ε}
                    let t = (p * ray.conj()).re.max(sector.epsilon);
                    m = m.min((p - t * ray).norm());
                }
                m
            }
        }
    }
}

/// Distance from `c` to the cut `(-∞, 0]`.
pub fn distance_to_cut(c: Complex64) -> f64 {
    if c.re >= 0.0 {
        c.norm()
    } else {
        c.im.abs()
    }
}

/// `λ^z` with the branch cut along the ray of angle `axis`.
fn power_with_cut(lambda: Complex64, z: Complex64, axis: f64) -> Complex64 {
    if lambda == ZERO {
        return ZERO;
    }
    let mut arg = lambda.arg();
    while arg > axis {
        arg -= TAU;
    }
    while arg <= axis - TAU {
        arg += TAU;
    }
    (z * Complex64::new(lambda.norm().ln(), arg)).exp()
}

/// `(2πi)^{-1} ∮ λ^z (p - λ)^{-1} dλ` over `contour`, which equals `p^z`.
///
/// Circles are traversed clockwise and must avoid `(-∞, 0]`; the keyhole
/// runs along `∂Λ_ε` with the cut of `λ^z` on the sector axis and needs
/// `Re z < 0`.
pub fn contour_power_scalar(p: Complex64, z: Complex64, contour: &Contour) -> Result<Complex64> {
    let margin = contour.margin(p);
    match contour.kind {
        ContourKind::Circle { center, radius } => {
            if margin < 1e-12 * radius.max(1.0) {
                return Err(Error::Geometry(format!("{p} lies on the contour")));
            }
            if (p - center).norm() > radius {
                return Err(Error::Geometry(format!("{p} is not enclosed by the contour")));
            }
            if distance_to_cut(center) <= radius {
                return Err(Error::Geometry("circle meets the branch cut (-∞, 0]".into()));
            }
            // clockwise with (p - λ)^{-1} is counter-clockwise with (λ - p)^{-1}
            Ok(circle_integral(center, radius, contour.nodes, |l| l.powc(z) / (l - p)))
        }
        ContourKind::Keyhole { sector } => {
            if z.re >= 0.0 {
                return Err(Error::Domain("keyhole integral needs Re z < 0".into()));
            }
            if sector.contains(p) || p.norm() <= sector.epsilon {
                return Err(Error::Geometry(format!("{p} lies in Λ_ε")));
            }
            if margin < 1e-12 {
                return Err(Error::Geometry(format!("{p} lies on the contour")));
            }
            Ok(keyhole_integral(p, z, &sector))
        }
    }
}

/// Integral over the boundary of the complement of `Λ_ε`, traversed with the
/// complement on the left, of `(2πi)^{-1} λ^z (λ - p)^{-1}`.
fn keyhole_integral(p: Complex64, z: Complex64, sector: &Sector) -> Complex64 {
    let axis = sector.axis_angle;
    // the complement is {|λ| > ε, |arg λ - (axis + π)| < β}
    let beta = PI - sector.half_angle;
    let rot = Complex64::from_polar(1.0, axis + PI);
    let eps = sector.epsilon;
    let f = |l: Complex64| power_with_cut(l, z, axis) / (l - p);
    let upper = rot * Complex64::from_polar(1.0, beta);
    let lower = rot * Complex64::from_polar(1.0, -beta);
    // upper ray inward, lower ray outward
    let rays = exp_sinh(|s| {
        let r = eps + s;
        lower * f(lower * r) - upper * f(upper * r)
    });
    // arc from angle β down to -β
    let arc = -tanh_sinh(-beta, beta, |phi| {
        let e = rot * Complex64::from_polar(eps, phi);
        f(e) * I * e
    });
    (rays + arc) / (TAU * I)
}

/// Result of [`resolvent_bound_check`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolventBound {
    pub constant: f64,
    pub refined: f64,
    pub pass: bool,
}

/// Spectral upsampling of a periodic grid function along both angles.
fn upsample(a: &ClassicalBisingularSymbol, values: &[Complex64], factor: usize) -> Vec<Complex64> {
    let g = a.grid();
    let (n1, n2) = (g.n1, g.n2);
    let (m1, m2) = (n1 * factor, n2 * factor);
    let mut out = Vec::with_capacity(m1 * m2 * 4);
    for w1 in 0..2 {
        for w2 in 0..2 {
            // 2D DFT of the slice
            let slice: Vec<Complex64> = (0..n1)
                .flat_map(|i1| (0..n2).map(move |i2| (i1, i2)))
                .map(|(i1, i2)| values[g.index(i1, w1, i2, w2)])
                .collect();
            let freqs = |n: usize| -> Vec<i64> { ((1 - (n as i64) / 2)..(n as i64 / 2)).collect() };
            let (f1, f2) = (freqs(n1), freqs(n2));
            let mut coef = vec![ZERO; f1.len() * f2.len()];
            for (a1, &p) in f1.iter().enumerate() {
                for (a2, &q) in f2.iter().enumerate() {
                    let mut acc = ZERO;
                    for i1 in 0..n1 {
                        for i2 in 0..n2 {
                            let ph = -TAU * (p as f64 * i1 as f64 / n1 as f64 + q as f64 * i2 as f64 / n2 as f64);
                            acc += slice[i1 * n2 + i2] * Complex64::from_polar(1.0, ph);
                        }
                    }
                    coef[a1 * f2.len() + a2] = acc / (n1 * n2) as f64;
                }
            }
            for i1 in 0..m1 {
                for i2 in 0..m2 {
                    let (t1, t2) = (TAU * i1 as f64 / m1 as f64, TAU * i2 as f64 / m2 as f64);
                    let mut acc = ZERO;
                    for (a1, &p) in f1.iter().enumerate() {
                        for (a2, &q) in f2.iter().enumerate() {
                            acc += coef[a1 * f2.len() + a2] * Complex64::from_polar(1.0, p as f64 * t1 + q as f64 * t2);
                        }
                    }
                    out.push(acc);
                }
            }
        }
    }
    out
}

fn bound_constant(values: &[Complex64], sector: &Sector, r_max: f64, per_ray: usize) -> f64 {
    let samples = sector.boundary_samples(r_max, per_ray);
    let qs = par::map_slice(values, |&c| joint_quotient(c, &samples, sector));
    qs.into_iter()
        .try_fold(0.0f64, |acc, q| q.map(|q| acc.max(q)))
        .unwrap_or(f64::INFINITY)
}

/// Sampled constant of `|(λ - a_m)^{-1}| (|λ| + ⟨ξ₁⟩^{m₁}⟨ξ₂⟩^{m₂})` on `∂Λ`,
/// reduced by homogeneity to the joint symbol on the cospheres, and its value
/// after refining both the `λ` samples and the angular grid by a factor 2.
pub fn resolvent_bound_check(a: &ClassicalBisingularSymbol, sector: &Sector) -> Result<ResolventBound> {
    let c00 = a.component(0, 0)?;
    let max_abs = c00.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
    let r_max = 1e3 * max_abs;
    let constant = bound_constant(c00, sector, r_max, 24);
    let fine = upsample(a, c00, 2);
    let refined = bound_constant(&fine, sector, r_max, 48);
    let pass = constant.is_finite() && refined.is_finite() && (refined - constant).abs() <= 0.1 * constant;
    Ok(ResolventBound {
        constant,
        refined,
        pass,
    })
}

/// Circle around the values of the joint symbol that avoids the cut `(-∞, 0]`.
fn enclosing_circle(c00: &[Complex64]) -> Result<(Complex64, f64)> {
    let (mut lo_re, mut hi_re, mut lo_im, mut hi_im) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for v in c00 {
        lo_re = lo_re.min(v.re);
        hi_re = hi_re.max(v.re);
        lo_im = lo_im.min(v.im);
        hi_im = hi_im.max(v.im);
    }
    let center = Complex64::new(0.5 * (lo_re + hi_re), 0.5 * (lo_im + hi_im));
    let spread = c00.iter().map(|v| (v - center).norm()).fold(0.0, f64::max);
    let gap = distance_to_cut(center);
    if spread >= gap {
        return Err(Error::Assumption(format!(
            "joint symbol values cannot be enclosed away from (-∞, 0] (spread {spread:.3e}, gap {gap:.3e})"
        )));
    }
    Ok((center, 0.5 * (spread + gap)))
}

const MAX_POWER_NODES: usize = 4096;

/// Components `(2πi)^{-1}∮ μ^z b_{jk}(μ) dμ` of `A^z`, `Re z < 0`, with
/// node doubling until the components settle.
fn contour_power_components(
    a: &ClassicalBisingularSymbol,
    z: Complex64,
    depth: (usize, usize),
) -> Result<Vec<Vec<Complex64>>> {
    let c00 = a.component(0, 0)?;
    let (center, radius) = enclosing_circle(c00)?;
    let slots = (depth.0 + 1) * (depth.1 + 1);
    let len = a.grid().len();
    let integrate = |nodes: usize| -> Result<Vec<Vec<Complex64>>> {
        let per_node = par::try_map_range(nodes, |k| {
            let e = Complex64::from_polar(1.0, TAU * k as f64 / nodes as f64);
            let mu = center + radius * e;
            // clockwise: (2πi)^{-1} dμ = -r e^{iφ} dφ / 2π
            let w = -mu.powc(z) * radius * e / nodes as f64;
            parametrix_components(a, mu, depth).map(|c| (w, c))
        })?;
        let mut acc = vec![vec![ZERO; len]; slots];
        for (w, comps) in per_node {
            for (dst, src) in acc.iter_mut().zip(comps) {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += w * s;
                }
            }
        }
        Ok(acc)
    };
    let mut nodes = MIN_CONTOUR_NODES;
    let mut prev = integrate(nodes)?;
    let mut prev_diff = f64::INFINITY;
    loop {
        nodes *= 2;
        let next = integrate(nodes)?;
        let scale = next.iter().flatten().map(|v| v.norm()).fold(1.0, f64::max);
        let diff = next
            .iter()
            .flatten()
            .zip(prev.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        // converged, or stalled at the rounding floor
        let stalled = diff < 1e-9 * scale && diff > 0.25 * prev_diff;
        if diff <= 1e-13 * scale || stalled || nodes >= MAX_POWER_NODES {
            return Ok(next);
        }
        prev = next;
        prev_diff = diff;
    }
}

/// Exact `A^z` of a positive exact multiplier `c · Π|ξ + a|^p`.
fn exact_power(terms: &[ExactTerm], z: Complex64) -> Option<Vec<ExactTerm>> {
    let [t] = terms else { return None };
    if t.base.is_some() || t.coeff.im != 0.0 || t.coeff.re <= 0.0 {
        return None;
    }
    let mut factors = [CircleFactor::identity(), CircleFactor::identity()];
    for (dst, f) in factors.iter_mut().zip(&t.factors) {
        if f.0.iter().any(|s| s.signed) {
            return None;
        }
        *dst = CircleFactor(
            f.0.iter()
                .map(|s| ShiftedPower {
                    a: s.a,
                    power: s.power * z,
                    signed: false,
                })
                .collect(),
        );
    }
    let [f1, f2] = factors;
    Some(vec![ExactTerm::new(t.coeff.powc(z), f1, f2)])
}

/// Assumption check: Λ-ellipticity for the sector around `(-∞, 0]` and
/// a joint symbol that can be enclosed away from the cut.
fn check_assumption(a: &ClassicalBisingularSymbol) -> Result<()> {
    let report = lambda_elliptic_check(a, &Sector::left(PI / 4.0), 10.0)?;
    if !report.pass {
        return Err(Error::Assumption(format!(
            "symbol is not Λ-elliptic for the sector around (-∞, 0]: {:?}",
            report.witness
        )));
    }
    enclosing_circle(a.component(0, 0)?).map(|_| ())
}

/// Symbol of `A^z` to the given depth.
///
/// For `Re z < 0` the components are contour integrals of the resolvent
/// parametrix; for `Re z >= 0`, `A^z = A^{z-k} ∘ A^k` with `k <= 2`.
/// The result has bi-order `(m₁z, m₂z)`.
pub fn complex_power_symbol(
    a: &ClassicalBisingularSymbol,
    z: Complex64,
    depth: (usize, usize),
) -> Result<ClassicalBisingularSymbol> {
    check_assumption(a)?;
    if z == ZERO {
        return Ok(ClassicalBisingularSymbol::identity(a.grid(), depth));
    }
    if z.re >= 0.0 {
        let k = z.re.floor() as usize + 1;
        if k > 2 {
            return Err(Error::Unsupported(format!(
                "A^z for Re z = {} needs A^{k}; only k <= 2 is provided",
                z.re
            )));
        }
        let mut ak = a.truncate(depth)?;
        for _ in 1..k {
            ak = compose(&ak, a, depth)?;
        }
        let lower = complex_power_symbol(a, z - k as f64, depth)?;
        return compose(&lower, &ak, depth);
    }
    let comps = contour_power_components(a, z, depth)?;
    let order = a.order();
    let mut out = ClassicalBisingularSymbol::from_flat(
        BiOrder::complex(order.m1 * z, order.m2 * z),
        depth,
        a.grid(),
        comps,
        a.is_multiplier(),
    );
    if let Some(t) = a.exact_terms().and_then(|t| exact_power(t, z)) {
        out = out.with_exact_terms(t);
    }
    Ok(out)
}

/// Sign operator `F = a ∘ (a²)^{-1/2}` of a self-adjoint elliptic symbol.
pub fn sign_operator_symbol(a: &ClassicalBisingularSymbol) -> Result<ClassicalBisingularSymbol> {
    let depth = a.depth();
    let defect = adjoint(a, depth)?.sub(a)?.sup_norm();
    if defect > 1e-10 {
        return Err(Error::Precondition(format!("symbol is not self-adjoint (defect {defect:.3e})")));
    }
    if let Some(v) = a.component(0, 0)?.iter().find(|v| v.im.abs() > 1e-12 || v.re == 0.0) {
        return Err(Error::Precondition(format!(
            "joint principal symbol must be real and nonvanishing, found {v}"
        )));
    }
    let square = compose(a, a, depth)?;
    let inv_abs = complex_power_symbol(&square, Complex64::new(-0.5, 0.0), depth)?;
    compose(a, &inv_abs, depth)
}

/// Image of one eigenvalue under the holomorphic calculus.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappedEigenvalue {
    pub lambda: f64,
    pub multiplicity: u64,
    pub value: Complex64,
    pub direct: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappedSpectrum {
    pub data: Vec<MappedEigenvalue>,
    /// `max |contour - direct| / max(1, |direct|)`.
    pub max_error: f64,
}

/// `f(A)` on the first `count` eigenvalues of a model, each by the Cauchy
/// integral over a circle around that eigenvalue.
///
/// With `radius = None` the circle radius is half the gap to the nearest
/// other eigenvalue (at most 1). A given radius that puts another eigenvalue
/// within 1e-12 of a circle, or inside it, is a geometry error.
pub fn holomorphic_calculus<F>(f: F, op: &SpectralOperator, count: usize, radius: Option<f64>) -> Result<MappedSpectrum>
where
    F: Fn(Complex64) -> Complex64 + Sync + Send,
{
    let mut data = op.eigenvalues(count)?;
    data.sort_by(|x, y| x.value.total_cmp(&y.value));
    let values: Vec<f64> = data.iter().map(|d| d.value).collect();
    let mut out = Vec::with_capacity(data.len());
    let mut max_error: f64 = 0.0;
    for (i, d) in data.iter().enumerate() {
        let gap = values
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| (v - d.value).abs())
            .fold(f64::INFINITY, f64::min);
        let r = match radius {
            Some(r) => {
                if gap <= r + 1e-12 {
                    return Err(Error::Geometry(format!(
                        "circle of radius {r} around {} meets the spectrum",
                        d.value
                    )));
                }
                r
            }
            None => (0.5 * gap).min(1.0),
        };
        let center = Complex64::new(d.value, 0.0);
        let value = circle_integral(center, r, 128, |w| f(w) / (w - center));
        let direct = f(center);
        max_error = max_error.max((value - direct).norm() / direct.norm().max(1.0));
        out.push(MappedEigenvalue {
            lambda: d.value,
            multiplicity: d.multiplicity,
            value,
            direct,
        });
    }
    Ok(MappedSpectrum { data: out, max_error })
}

/// Leading-symbol defect `sup |(A^z)_{00} - (a_{00})^z|`.
pub fn leading_power_defect(a: &ClassicalBisingularSymbol, power: &ClassicalBisingularSymbol, z: Complex64) -> Result<f64> {
    let lead = power.component(0, 0)?;
    Ok(a
        .component(0, 0)?
        .iter()
        .zip(lead)
        .map(|(c, p)| (c.powc(z) - p).norm())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{exact_symbol, make_model, ModelKind};
    use crate::symbolcore::{random_positive_elliptic, Grid};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn scalar_powers_on_circles() {
        let circ = |p: Complex64| Contour::circle(p, 0.5 * distance_to_cut(p), 64).unwrap();
        let v = contour_power_scalar(c(3.0, 0.0), c(-0.5, 0.0), &circ(c(3.0, 0.0))).unwrap();
        assert!((v - 3f64.powf(-0.5)).norm() < 1e-12);
        let v = contour_power_scalar(c(2.0, 0.0), c(2.0, 0.0), &circ(c(2.0, 0.0))).unwrap();
        assert!((v - 4.0).norm() < 1e-10);
        let v = contour_power_scalar(c(1.0, 0.0), c(-1.3, 2.0), &circ(c(1.0, 0.0))).unwrap();
        assert!((v - 1.0).norm() < 1e-12);
    }

    #[test]
    fn keyhole_matches_principal_power() {
        let contour = Contour::keyhole(Sector::left(PI / 4.0));
        for (p, z) in [(c(3.0, 0.0), c(-0.5, 0.0)), (c(0.7, 1.1), c(-1.4, 0.3))] {
            let v = contour_power_scalar(p, z, &contour).unwrap();
            assert!((v - p.powc(z)).norm() < 1e-9, "{p} {z}: {v}");
        }
    }

    #[test]
    fn point_on_contour_is_rejected() {
        let contour = Contour::circle(c(2.0, 0.0), 1.0, 64).unwrap();
        assert!(matches!(
            contour_power_scalar(c(3.0, 0.0), c(-0.5, 0.0), &contour),
            Err(Error::Geometry(_))
        ));
    }

    #[test]
    fn random_scalar_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let p = Complex64::from_polar(rng.gen_range(0.5..10.0), rng.gen_range(-2.5..2.5));
            let z = c(rng.gen_range(-3.0..-1e-3), rng.gen_range(-2.0..2.0));
            let contour = Contour::circle(p, 0.5 * distance_to_cut(p), 64).unwrap();
            let v = contour_power_scalar(p, z, &contour).unwrap();
            assert!((v - p.powc(z)).norm() < 1e-9 * p.powc(z).norm().max(1.0));
        }
    }

    #[test]
    fn leading_component_is_pointwise_power() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = random_positive_elliptic(&mut rng, Grid::square(16).unwrap(), (2, 2), BiOrder::new(1.0, 1.0));
        let z = c(-0.7, 0.0);
        let p = complex_power_symbol(&a, z, (2, 2)).unwrap();
        assert!(leading_power_defect(&a, &p, z).unwrap() < 1e-9);
        assert_eq!(p.order().m1, c(-0.7, 0.0));
    }

    #[test]
    fn multiplier_semigroup() {
        let op = make_model(ModelKind::tensor(ModelKind::abs_circle_dirac(0.5), ModelKind::abs_circle_dirac(0.5))).unwrap();
        let a = exact_symbol(&op).unwrap();
        let h = complex_power_symbol(&a, c(-0.5, 0.0), (4, 4)).unwrap();
        let whole = complex_power_symbol(&a, c(-1.0, 0.0), (4, 4)).unwrap();
        let prod = compose(&h, &h, (4, 4)).unwrap();
        let diff = prod.sub(&whole).unwrap();
        assert!(diff.sup_norm() < 1e-10, "{}", diff.sup_norm());
    }

    #[test]
    fn sign_of_dirac_tensor() {
        let op = make_model(ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(0.25))).unwrap();
        let a = exact_symbol(&op).unwrap();
        let f = sign_operator_symbol(&a).unwrap();
        let g = a.grid();
        for idx in 0..g.len() {
            let (_, o1, _, o2) = g.point(idx);
            assert!((f.component(0, 0).unwrap()[idx] - o1 * o2).norm() < 1e-10);
        }
        let ff = compose(&f, &f, f.depth()).unwrap();
        let id = ClassicalBisingularSymbol::identity(g, f.depth());
        assert!(ff.sub(&id).unwrap().sup_norm() < 1e-8);
    }

    #[test]
    fn resolvent_bound_for_positive_symbol() {
        let op = make_model(ModelKind::tensor(ModelKind::abs_circle_dirac(0.5), ModelKind::abs_circle_dirac(0.5))).unwrap();
        let a = exact_symbol(&op).unwrap();
        let r = resolvent_bound_check(&a, &Sector::left(PI / 2.0)).unwrap();
        assert!(r.pass && r.constant <= 2.0, "{r:?}");
    }

    #[test]
    fn exp_on_first_modes() {
        let op = make_model(ModelKind::abs_circle_dirac(0.5)).unwrap();
        let m = holomorphic_calculus(|w| w.exp(), &op, 100, None).unwrap();
        assert!(m.max_error < 1e-10, "{}", m.max_error);
        let sq = holomorphic_calculus(|w| w * w, &op, 10, None).unwrap();
        for d in &sq.data {
            assert!((d.value - d.lambda * d.lambda).norm() < 1e-10);
        }
    }
}
