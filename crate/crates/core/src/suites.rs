//! Invariant suites run by `bispec verify` and by the acceptance tests.
//!
//! Every suite is deterministic for a fixed [`SuiteConfig`].

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canonical_trace::{trb, trb_family_residue};
use crate::cpowers::{complex_power_symbol, contour_power_scalar, distance_to_cut, leading_power_defect, Contour};
use crate::meromorphic::{eta, laurent_in_chart, residue_identity_check, spectral_cut_identity, zeta, Chart, SpectralFunction};
use crate::report::{complex_json, CheckRecord, SuiteReport};
use crate::spectra::{exact_symbol, exact_symbol_with, make_model, multiplier_symbol, ModelKind, SpectralOperator};
use crate::symbolcore::{
    commutator, compatibility_check, compose, random_positive_elliptic, random_symbol, rc_inverse, rc_map, BiOrder,
    CircleFactor, ClassicalBisingularSymbol, Grid, DEFAULT_DEPTH, DEFAULT_GRID,
};
use crate::wodzicki::{commutator_residue, projection_residue, wres2_quadrature, wres_spectral, ProjectionInput};
use crate::{Error, Result};

pub const SUITE_NAMES: [&str; 6] = [
    "trace",
    "eta-regularity",
    "residue-identity",
    "route-agreement",
    "canonical-trace",
    "complex-powers",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every per-check tolerance when set.
    pub tol: Option<f64>,
    pub grid: usize,
    pub depth: (usize, usize),
    /// Random pairs in the trace suite.
    pub pairs: usize,
    /// Scalar samples in the complex-power suite.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            tol: None,
            grid: DEFAULT_GRID,
            depth: DEFAULT_DEPTH,
            pairs: 20,
            samples: 200,
        }
    }
}

impl SuiteConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn grid(&self) -> Result<Grid> {
        Grid::square(self.grid)
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match name {
        "trace" => trace_checks(cfg)?,
        "eta-regularity" => eta_regularity_checks(cfg)?,
        "residue-identity" => residue_identity_checks(cfg)?,
        "route-agreement" => route_agreement_checks(cfg)?,
        "canonical-trace" => canonical_trace_checks(cfg)?,
        "complex-powers" => complex_power_checks(cfg)?,
        other => return Err(Error::Parameter(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport::new(name, checks))
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn record<T>(check: String, r: Result<T>, f: impl FnOnce(T) -> CheckRecord) -> CheckRecord {
    match r {
        Ok(v) => f(v),
        Err(e) => CheckRecord::failed(check, e.to_string()),
    }
}

fn tensor(a: ModelKind, b: ModelKind) -> Result<SpectralOperator> {
    make_model(ModelKind::tensor(a, b))
}

fn abs_pow(a: f64, power: f64) -> ModelKind {
    ModelKind::AbsCircleDirac { a, power }
}

/// `Wres²([A, B]) = 0` on seeded random pairs and on multiplier pairs.
///
/// Compositions run at `cfg.depth`; depths too shallow for the residue
/// component are reported as failed checks.
pub fn trace_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let grid = cfg.grid()?;
    let tol = cfg.tol(1e-6);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for i in 0..cfg.pairs {
        let a = random_symbol(&mut rng, grid, cfg.depth);
        let b = random_symbol(&mut rng, grid, cfg.depth);
        let name = format!("random pair {i}: Wres2([A,B])");
        out.push(record(name.clone(), commutator_residue(&a, &b), |r| {
            CheckRecord::compare(name, r.value, zero(), tol)
                .with_certificate("orders", format!("({}, {}) x ({}, {})", a.order().m1.re, a.order().m2.re, b.order().m1.re, b.order().m2.re))
                .with_certificate("certificate", r.certificate)
        }));
    }
    let pairs = [
        (tensor(abs_pow(0.3, -1.0), abs_pow(0.6, -1.0))?, tensor(ModelKind::circle_dirac(0.25), ModelKind::abs_circle_dirac(0.4))?),
        (tensor(ModelKind::circle_dirac(0.5), abs_pow(0.5, 2.0))?, tensor(abs_pow(1.0 / 3.0, -2.0), ModelKind::circle_dirac(0.25))?),
    ];
    for (i, (a, b)) in pairs.iter().enumerate() {
        let name = format!("multiplier pair {i}: Wres2([A,B])");
        let r = exact_symbol_with(a, grid, cfg.depth)
            .and_then(|sa| Ok((sa, exact_symbol_with(b, grid, cfg.depth)?)))
            .and_then(|(sa, sb)| commutator_residue(&sa, &sb));
        // exact zero is required here
        out.push(record(name.clone(), r, |r| CheckRecord::compare(name, r.value, zero(), f64::MIN_POSITIVE)));
    }
    for (name, input) in projection_inputs()? {
        let name = format!("projection {name}: Wres2(P)");
        out.push(record(name.clone(), projection_residue(&input), |r| {
            CheckRecord::compare(name, r.value, zero(), cfg.tol(1e-8)).with_certificate("certificate", r.certificate)
        }));
    }
    Ok(out)
}

/// Idempotents whose residue must vanish.
pub fn projection_inputs() -> Result<Vec<(String, ProjectionInput)>> {
    let dirac = tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(0.25))?;
    let mixed = tensor(ModelKind::circle_dirac(1.0 / 3.0), ModelKind::abs_circle_dirac(0.5))?;
    let mut out = vec![
        ("finite rank 1".to_string(), ProjectionInput::FiniteRank { op: dirac.clone(), modes: 1 }),
        ("finite rank 4".to_string(), ProjectionInput::FiniteRank { op: mixed, modes: 4 }),
    ];
    // spectral projections (1 ± F)/2 of D ⊗ D
    let f = crate::cpowers::sign_operator_symbol(&exact_symbol(&dirac)?)?;
    let id = ClassicalBisingularSymbol::identity(f.grid(), f.depth());
    out.push(("positive part of D x D".into(), ProjectionInput::Symbol(id.add(&f)?.scale(c(0.5)))));
    out.push(("negative part of D x D".into(), ProjectionInput::Symbol(id.sub(&f)?.scale(c(0.5)))));
    Ok(out)
}

pub const ETA_SHIFTS: [f64; 3] = [0.25, 1.0 / 3.0, 0.5];

/// Laurent coefficients of `η(D_a ⊗ D_b, z)` at the origin.
pub fn eta_regularity_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let tol = cfg.tol(1e-8);
    let mut out = Vec::new();
    for (i, &a) in ETA_SHIFTS.iter().enumerate() {
        for &b in &ETA_SHIFTS[i..] {
            let op = tensor(ModelKind::circle_dirac(a), ModelKind::circle_dirac(b))?;
            let l = laurent_in_chart(&op, SpectralFunction::Eta, Chart::AMinusZ, zero());
            let label = format!("D_{a:.4} x D_{b:.4}");
            match l {
                Ok(l) => {
                    out.push(
                        CheckRecord::compare(format!("{label}: c-2 of eta at 0"), l.c_minus2(), zero(), tol)
                            .with_certificate("radius", l.radius)
                            .with_certificate("error_bound", l.error_bound),
                    );
                    out.push(CheckRecord::compare(format!("{label}: c-1 of eta at 0"), l.c_minus1(), zero(), tol));
                }
                Err(e) => out.push(CheckRecord::failed(label, e.to_string())),
            }
        }
    }
    let d = make_model(ModelKind::circle_dirac(0.25))?;
    let name = "eta(D_0.25, 0) = 1 - 2a".to_string();
    out.push(record(name.clone(), eta(&d, zero()), |v| CheckRecord::compare(name, v, c(0.5), cfg.tol(1e-10))));
    Ok(out)
}

/// Bridge models for the residue identity at `σ = 1`.
pub const IDENTITY_SHIFTS: [(f64, f64); 3] = [(0.25, 1.0 / 3.0), (0.5, 0.5), (0.3, 0.6)];

/// `Res² η = m₁m₂ Wres²(F|A|^{-σ}) = 4` on positive tensors, the same
/// identity at `σ = 0` for Dirac tensors, and the corrected spectral-cut
/// identity at regular points.
pub fn residue_identity_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let tol = cfg.tol(1e-6);
    let mut out = Vec::new();
    for &(a, b) in &IDENTITY_SHIFTS {
        let op = tensor(ModelKind::abs_circle_dirac(a), ModelKind::abs_circle_dirac(b))?;
        let label = format!("|D_{a:.4}| x |D_{b:.4}| at 1");
        match residue_identity_check(&op, 1.0, tol) {
            Ok(r) => {
                out.push(CheckRecord::compare(format!("{label}: Res2 eta"), r.eta, c(4.0), tol));
                match r.wres {
                    Some(w) => out.push(CheckRecord::compare(format!("{label}: m1 m2 Wres2(F|A|^-1)"), w, r.eta, tol)),
                    None => out.push(CheckRecord::failed(format!("{label}: Wres2"), "no torus symbol")),
                }
                out.push(CheckRecord::compare(format!("{label}: Res2 of the cut form"), r.cut, r.eta, tol));
            }
            Err(e) => out.push(CheckRecord::failed(label, e.to_string())),
        }
    }
    let op = tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(1.0 / 3.0))?;
    let name = "D_0.25 x D_0.3333 at 0: identity".to_string();
    out.push(record(name.clone(), residue_identity_check(&op, 0.0, cfg.tol(1e-8)), |r| {
        CheckRecord::compare(name, r.eta, r.wres.unwrap_or(r.cut), cfg.tol(1e-8)).with_certificate("discrepancy", r.discrepancy)
    }));
    out.extend(cut_identity_checks(cfg, 20)?);
    Ok(out)
}

pub fn cut_identity_models() -> Result<Vec<(String, SpectralOperator)>> {
    Ok(vec![
        ("D_0.25".into(), make_model(ModelKind::circle_dirac(0.25))?),
        ("|D_0.5|".into(), make_model(ModelKind::abs_circle_dirac(0.5))?),
        ("D_0.3333 x D_0.5".into(), tensor(ModelKind::circle_dirac(1.0 / 3.0), ModelKind::circle_dirac(0.5))?),
        ("D_0.25 x |D_0.3|".into(), tensor(ModelKind::circle_dirac(0.25), ModelKind::abs_circle_dirac(0.3))?),
    ])
}

/// Seeded regular points off the real axis, where neither η nor the cut
/// denominator is singular.
pub fn regular_points(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let im: f64 = rng.gen_range(0.2..1.5);
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            Complex64::new(rng.gen_range(-1.5..2.5), sign * im)
        })
        .collect()
}

/// `η(A, -z) = ζ↑(z) - (ζ↑(z) - ζ↓(z))/(1 - e^{iπz})` at `points` regular points per model.
pub fn cut_identity_checks(cfg: &SuiteConfig, points: usize) -> Result<Vec<CheckRecord>> {
    let tol = cfg.tol(1e-9);
    let mut out = Vec::new();
    for (label, op) in cut_identity_models()? {
        for z in regular_points(cfg.seed, points) {
            let name = format!("{label}: cut identity at {z:.3}");
            out.push(record(name.clone(), spectral_cut_identity(&op, z), |(lhs, rhs)| {
                CheckRecord::compare(name, lhs, rhs, tol * lhs.norm().max(1.0))
            }));
        }
    }
    Ok(out)
}

/// Spectral and quadrature `Wres²` on bridged models for every choice of weights.
pub fn route_agreement_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let tol = cfg.tol(1e-6);
    let grid = cfg.grid()?;
    let weights = [
        ("|D_0.5|", make_model(ModelKind::abs_circle_dirac(0.5))?),
        ("|D_0.3333|", make_model(ModelKind::abs_circle_dirac(1.0 / 3.0))?),
    ];
    let models = [
        ("|D_0.5|^-1 x |D_0.5|^-1", tensor(abs_pow(0.5, -1.0), abs_pow(0.5, -1.0))?, Some(4.0)),
        ("|D_0.25|^-1 x |D_0.3333|^-1", tensor(abs_pow(0.25, -1.0), abs_pow(1.0 / 3.0, -1.0))?, Some(4.0)),
        ("|D_0.3|^-1 x |D_0.7|^-2", tensor(abs_pow(0.3, -1.0), abs_pow(0.7, -2.0))?, Some(0.0)),
        ("D_0.25^-1 x |D_0.5|^-1", tensor(ModelKind::CircleDirac { a: 0.25, power: -1.0 }, abs_pow(0.5, -1.0))?, Some(0.0)),
    ];
    let mut out = Vec::new();
    for (label, op, expect) in &models {
        let quad = match exact_symbol_with(op, grid, cfg.depth).and_then(|s| wres2_quadrature(&s)) {
            Ok(r) => r.value,
            Err(e) => {
                out.push(CheckRecord::failed(format!("{label}: quadrature"), e.to_string()));
                continue;
            }
        };
        if let Some(v) = expect {
            out.push(CheckRecord::compare(format!("{label}: quadrature value"), quad, c(*v), tol));
        }
        for (n1, q1) in &weights {
            for (n2, q2) in &weights {
                let name = format!("{label}: spectral with Q = {n1} x {n2} vs quadrature");
                out.push(record(name.clone(), wres_spectral(op, q1, q2, 2), |r| {
                    CheckRecord::compare(name, r.value, quad, tol).with_certificate("certificate", r.certificate)
                }));
            }
        }
    }
    Ok(out)
}

fn shifted_power_family(a: f64, b: f64, grid: Grid, depth: (usize, usize)) -> impl Fn(Complex64) -> Result<ClassicalBisingularSymbol> + Sync + Send {
    move |z| {
        Ok(multiplier_symbol(
            c(1.0),
            CircleFactor::single(a, z, false),
            CircleFactor::single(b, z, false),
            grid,
            depth,
        ))
    }
}

/// `TRb` against the spectral trace on trace-class multipliers and the
/// double residue of `TRb` along `|D_a|^z ⊗ |D_b|^z` against `Wres²`.
pub fn canonical_trace_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let grid = cfg.grid()?;
    let mut out = Vec::new();
    let models = [
        (0.5, 0.5, -2.0, -2.0),
        (0.25, 1.0 / 3.0, -2.0, -3.0),
        (0.3, 0.7, -1.5, -2.5),
    ];
    for (a, b, p, q) in models {
        let op = tensor(abs_pow(a, p), abs_pow(b, q))?;
        let name = format!("|D_{a:.4}|^{p} x |D_{b:.4}|^{q}: TRb vs Tr");
        let r = exact_symbol_with(&op, grid, cfg.depth)
            .and_then(|s| trb(&s))
            .and_then(|t| Ok((t, zeta(&op, c(1.0))?)));
        out.push(record(name.clone(), r, |(t, tr)| {
            CheckRecord::compare(name, t.value, tr, cfg.tol(1e-8) * tr.norm().max(1.0))
                .with_certificate("certificate", t.certificate)
        }));
    }
    let name = "|D_0.5|^-2 x |D_0.5|^-2: TRb = pi^4".to_string();
    let r = exact_symbol_with(&tensor(abs_pow(0.5, -2.0), abs_pow(0.5, -2.0))?, grid, cfg.depth).and_then(|s| trb(&s));
    out.push(record(name.clone(), r, |t| CheckRecord::compare(name, t.value, c(PI.powi(4)), cfg.tol(1e-8) * 100.0)));
    for (a, b) in [(0.5, 0.5), (0.25, 1.0 / 3.0)] {
        let name = format!("|D_{a:.4}|^z x |D_{b:.4}|^z at -1: Res2 TRb vs Wres2");
        let r = trb_family_residue(shifted_power_family(a, b, grid, cfg.depth), -1.0, cfg.tol(1e-6));
        out.push(record(name.clone(), r, |r| {
            let signed = r.wres2 * f64::from(if r.sign == 0 { 1 } else { r.sign });
            CheckRecord::compare(name, r.residue, signed, cfg.tol(1e-6))
                .with_certificate("sign", r.sign)
                .with_certificate("wres2", complex_json(r.wres2))
        }));
    }
    Ok(out)
}

/// Scalar contour powers, leading symbols of `A^z` and the multiplier semigroup.
pub fn complex_power_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let grid = cfg.grid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let mut worst = (0.0, zero(), zero());
    let mut failure = None;
    for _ in 0..cfg.samples {
        let p = Complex64::from_polar(rng.gen_range(0.5..10.0), rng.gen_range(-2.5..2.5));
        let z = Complex64::new(rng.gen_range(-3.0..-1e-3), rng.gen_range(-2.0..2.0));
        let v = Contour::circle(p, 0.5 * distance_to_cut(p), 64).and_then(|k| contour_power_scalar(p, z, &k));
        match v {
            Ok(v) => {
                let exact = p.powc(z);
                let err = (v - exact).norm() / exact.norm().max(1.0);
                if err >= worst.0 {
                    worst = (err, v / exact.norm().max(1.0), exact / exact.norm().max(1.0));
                }
            }
            Err(e) => failure = Some(e.to_string()),
        }
    }
    out.push(match failure {
        Some(e) => CheckRecord::failed("scalar contour powers", e),
        None => CheckRecord::compare(format!("scalar contour powers, worst of {}", cfg.samples), worst.1, worst.2, cfg.tol(1e-9)),
    });
    for (i, z) in [c(-0.7), Complex64::new(-1.3, 0.8), c(-2.5)].into_iter().enumerate() {
        let a = random_positive_elliptic(&mut rng, grid, (2, 2), BiOrder::new(1.0, 1.0));
        let name = format!("random elliptic {i}: leading symbol of A^{z}");
        let r = complex_power_symbol(&a, z, (2, 2)).and_then(|p| leading_power_defect(&a, &p, z));
        out.push(record(name.clone(), r, |d| CheckRecord::compare(name, c(d), zero(), cfg.tol(1e-9))));
    }
    for (a, b) in [(0.5, 0.5), (0.25, 1.0 / 3.0)] {
        let name = format!("|D_{a:.4}| x |D_{b:.4}|: A^-1/2 A^-1/2 = A^-1");
        let r = exact_symbol_with(&tensor(ModelKind::abs_circle_dirac(a), ModelKind::abs_circle_dirac(b))?, grid, cfg.depth)
            .and_then(|s| {
                let h = complex_power_symbol(&s, c(-0.5), cfg.depth)?;
                let whole = complex_power_symbol(&s, c(-1.0), cfg.depth)?;
                Ok(compose(&h, &h, cfg.depth)?.sub(&whole)?.sup_norm())
            });
        out.push(record(name.clone(), r, |d| CheckRecord::compare(name, c(d), zero(), cfg.tol(1e-10))));
    }
    Ok(out)
}

/// `σᵢ` and joint-symbol multiplicativity defects of `a ∘ b`.
pub fn principal_multiplicativity(a: &ClassicalBisingularSymbol, b: &ClassicalBisingularSymbol) -> Result<f64> {
    let depth = (a.depth().0.min(b.depth().0), a.depth().1.min(b.depth().1));
    let ab = compose(a, b, depth)?;
    // rows j = 0 only see the ξ₂-calculus of the j = 0 rows
    let s1 = compose(&a.truncate((0, depth.1))?, &b.truncate((0, depth.1))?, (0, depth.1))?;
    let s2 = compose(&a.truncate((depth.0, 0))?, &b.truncate((depth.0, 0))?, (depth.0, 0))?;
    let mut err: f64 = 0.0;
    for k in 0..=depth.1 {
        err = err.max(max_diff(ab.component(0, k)?, s1.component(0, k)?));
    }
    for j in 0..=depth.0 {
        err = err.max(max_diff(ab.component(j, 0)?, s2.component(j, 0)?));
    }
    let joint: Vec<Complex64> = a.component(0, 0)?.iter().zip(b.component(0, 0)?).map(|(x, y)| x * y).collect();
    Ok(err.max(max_diff(ab.component(0, 0)?, &joint)))
}

fn max_diff(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Compatibility of principal symbols on constructed symbols, `σᵢ`
/// multiplicativity on random pairs and the radial compactification round trip.
pub fn calculus_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let grid = cfg.grid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let mut symbols: Vec<(String, ClassicalBisingularSymbol)> = Vec::new();
    for i in 0..5 {
        symbols.push((format!("random {i}"), random_symbol(&mut rng, grid, cfg.depth)));
    }
    for (label, op) in cut_identity_models()? {
        if let Ok(s) = exact_symbol_with(&op, grid, cfg.depth) {
            symbols.push((format!("model {label}"), s));
        }
    }
    let composed = compose(&symbols[0].1, &symbols[1].1, cfg.depth)?;
    symbols.push(("composition".into(), composed));
    symbols.push(("commutator".into(), commutator(&symbols[2].1, &symbols[3].1, cfg.depth)?));
    let pos = random_positive_elliptic(&mut rng, grid, (2, 2), BiOrder::new(1.0, 1.0));
    symbols.push(("complex power".into(), complex_power_symbol(&pos, c(-0.5), (2, 2))?));
    for (label, s) in &symbols {
        let (_, err) = compatibility_check(s);
        out.push(CheckRecord::compare(format!("{label}: compatibility"), c(err), zero(), cfg.tol(1e-12)));
    }
    for i in 0..5 {
        let a = random_symbol(&mut rng, grid, cfg.depth);
        let b = random_symbol(&mut rng, grid, cfg.depth);
        let name = format!("random pair {i}: principal multiplicativity");
        out.push(record(name.clone(), principal_multiplicativity(&a, &b), |e| {
            CheckRecord::compare(name, c(e), zero(), cfg.tol(1e-10))
        }));
    }
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let xi: Vec<f64> = (0..n).map(|_| rng.gen_range(-1e3..1e3)).collect();
        let (z, z0) = rc_map(&xi);
        let back = rc_inverse(z0, &z)?;
        let scale = xi.iter().map(|x| x.abs()).fold(1.0, f64::max);
        worst = worst.max(xi.iter().zip(&back).map(|(x, y)| (x - y).abs() / scale).fold(0.0, f64::max));
    }
    out.push(CheckRecord::compare("rc round trip", c(worst), zero(), cfg.tol(1e-12)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run_suite("nope", &SuiteConfig::default()), Err(Error::Parameter(_))));
    }

    #[test]
    fn regular_points_are_deterministic_and_off_axis() {
        let p = regular_points(42, 20);
        assert_eq!(p, regular_points(42, 20));
        assert!(p.iter().all(|z| z.im.abs() >= 0.2));
    }
}
