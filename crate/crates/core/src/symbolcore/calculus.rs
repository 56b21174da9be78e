use num_complex::Complex64;

use super::exact::ExactTerm;
use super::grid::{differentiate, Grid};
use super::symbol::ClassicalBisingularSymbol;
use crate::{par, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Falling factorial `d (d-1) ⋯ (d-n+1)`.
pub fn falling_factorial(d: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (d - i as f64))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `(-1)^{α₁ w₁ + α₂ w₂}` at each grid point, i.e. `ω₁^{α₁} ω₂^{α₂}`.
fn omega_power(grid: &Grid, idx: usize, alpha1: usize, alpha2: usize) -> f64 {
    let w2 = idx & 1;
    let w1 = (idx / (2 * grid.n2)) & 1;
    if (alpha1 * w1 + alpha2 * w2) % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

/// The three principal symbols of a bisingular symbol.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalSymbols {
    /// `σ₁`: for each `(θ₁, ω₁)` a classical symbol in the second factor,
    /// stored as the row `c_{0k}`, `k = 0..=N2`.
    pub sigma1: Vec<Vec<Complex64>>,
    /// `σ₂`: the column `c_{j0}`, `j = 0..=N1`.
    pub sigma2: Vec<Vec<Complex64>>,
    pub joint: Vec<Complex64>,
}

pub fn principal_symbols(a: &ClassicalBisingularSymbol) -> PrincipalSymbols {
    let (n1, n2) = a.depth();
    PrincipalSymbols {
        sigma1: (0..=n2).map(|k| a.component(0, k).unwrap().to_vec()).collect(),
        sigma2: (0..=n1).map(|j| a.component(j, 0).unwrap().to_vec()).collect(),
        joint: a.joint_principal().to_vec(),
    }
}

/// Compatibility of `σ₁`, `σ₂` and `σ^{m1,m2}`: the leading term of each
/// operator-valued symbol must equal the joint symbol. Returns whether the
/// discrepancy is below `1e-12` and the discrepancy itself.
pub fn compatibility_check(a: &ClassicalBisingularSymbol) -> (bool, f64) {
    let p = principal_symbols(a);
    let err = p.sigma1[0]
        .iter()
        .zip(&p.sigma2[0])
        .zip(&p.joint)
        .map(|((s1, s2), s)| (s1 - s).norm().max((s2 - s).norm()))
        .fold(0.0, f64::max);
    (err < 1e-12, err)
}

fn check_depth(a: &ClassicalBisingularSymbol, depth: (usize, usize)) -> Result<()> {
    let (d1, d2) = a.depth();
    if depth.0 > d1 || depth.1 > d2 {
        return Err(Error::Truncation {
            req1: depth.0,
            req2: depth.1,
            avail1: d1,
            avail2: d2,
        });
    }
    Ok(())
}

/// Table of `D^α b_{jk}` for `j + α₁ <= N1`, `k + α₂ <= N2`.
struct Derivatives {
    depth: (usize, usize),
    data: Vec<Option<Vec<Complex64>>>,
}

impl Derivatives {
    fn new(depth: (usize, usize)) -> Self {
        let size = (depth.0 + 1).pow(2) * (depth.1 + 1).pow(2);
        Derivatives {
            depth,
            data: vec![None; size],
        }
    }

    fn slot(&self, j: usize, a1: usize, k: usize, a2: usize) -> usize {
        ((j * (self.depth.0 + 1) + a1) * (self.depth.1 + 1) + k) * (self.depth.1 + 1) + a2
    }

    fn get(&self, j: usize, a1: usize, k: usize, a2: usize) -> Option<&[Complex64]> {
        self.data[self.slot(j, a1, k, a2)].as_deref()
    }

    /// Fill all derivatives of component `(j, k)`.
    fn fill(&mut self, grid: &Grid, j: usize, k: usize, values: &[Complex64], with_derivatives: bool) {
        let (m1, m2) = if with_derivatives {
            (self.depth.0 - j, self.depth.1 - k)
        } else {
            (0, 0)
        };
        let orders: Vec<(usize, usize)> = (0..=m1).flat_map(|a1| (0..=m2).map(move |a2| (a1, a2))).collect();
        let results = par::map_slice(&orders, |&(a1, a2)| {
            if a1 == 0 && a2 == 0 {
                values.to_vec()
            } else {
                differentiate(grid, values, a1, a2)
            }
        });
        for ((a1, a2), v) in orders.into_iter().zip(results) {
            let s = self.slot(j, a1, k, a2);
            self.data[s] = Some(v);
        }
    }
}

/// `Σ` of composition terms contributing to component `(j, k)` of `a ∘ b`.
/// With `skip_top` the term `a_{00} · b_{jk}` is left out.
fn composition_terms(
    a: &ClassicalBisingularSymbol,
    db: &Derivatives,
    j: usize,
    k: usize,
    skip_top: bool,
) -> Vec<Complex64> {
    let grid = a.grid();
    let order = a.order();
    let mut out = vec![ZERO; grid.len()];
    for j1 in 0..=j {
        for a1 in 0..=(j - j1) {
            let j2 = j - j1 - a1;
            for k1 in 0..=k {
                for a2 in 0..=(k - k1) {
                    let k2 = k - k1 - a2;
                    if skip_top && j1 == 0 && k1 == 0 && a1 == 0 && a2 == 0 {
                        continue;
                    }
                    let Some(bd) = db.get(j2, a1, k2, a2) else {
                        continue;
                    };
                    let coef = falling_factorial(order.m1 - j1 as f64, a1)
                        * falling_factorial(order.m2 - k1 as f64, a2)
                        / (factorial(a1) * factorial(a2));
                    if coef == ZERO {
                        continue;
                    }
                    let ac = a.component(j1, k1).expect("depth checked");
                    for (idx, o) in out.iter_mut().enumerate() {
                        *o += coef * omega_power(&grid, idx, a1, a2) * ac[idx] * bd[idx];
                    }
                }
            }
        }
    }
    out
}

fn product_exact(a: &ClassicalBisingularSymbol, b: &ClassicalBisingularSymbol) -> Option<Vec<ExactTerm>> {
    let (ta, tb) = (a.exact_terms()?, b.exact_terms()?);
    let mut out = Vec::with_capacity(ta.len() * tb.len());
    for x in ta {
        for y in tb {
            out.push(x.mul(y)?);
        }
    }
    Some(out)
}

/// Symbol of the operator product `op(a) op(b)`, truncated at `depth`:
///
/// `(a ∘ b)_{jk} = Σ (α!)^{-1} ∂_ξ^α a_{j₁k₁} · D_θ^α b_{j₂k₂}`
/// over `j₁ + j₂ + α₁ = j`, `k₁ + k₂ + α₂ = k`, with
/// `∂_ξ^α (|ξ|^d c) = d^{(α)} ω^α |ξ|^{d-α} c` and `D_θ = -i∂_θ` applied spectrally.
pub fn compose(
    a: &ClassicalBisingularSymbol,
    b: &ClassicalBisingularSymbol,
    depth: (usize, usize),
) -> Result<ClassicalBisingularSymbol> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch);
    }
    check_depth(a, depth)?;
    check_depth(b, depth)?;
    let grid = a.grid();
    let a = a.truncate(depth)?;
    let mut db = Derivatives::new(depth);
    let with_derivatives = !b.is_multiplier();
    let pairs: Vec<(usize, usize)> = (0..=depth.0).flat_map(|j| (0..=depth.1).map(move |k| (j, k))).collect();
    for &(j, k) in &pairs {
        db.fill(&grid, j, k, b.component(j, k)?, with_derivatives);
    }
    let comps = par::map_slice(&pairs, |&(j, k)| composition_terms(&a, &db, j, k, false));
    let mut out = ClassicalBisingularSymbol::from_flat(
        a.order() + b.order(),
        depth,
        grid,
        comps,
        a.is_multiplier() && b.is_multiplier(),
    );
    if let Some(t) = product_exact(&a, b) {
        out = out.with_exact_terms(t);
    }
    Ok(out)
}

/// Commutator `a ∘ b - b ∘ a`.
pub fn commutator(
    a: &ClassicalBisingularSymbol,
    b: &ClassicalBisingularSymbol,
    depth: (usize, usize),
) -> Result<ClassicalBisingularSymbol> {
    compose(a, b, depth)?.sub(&compose(b, a, depth)?)
}

/// Symbol of the formal adjoint:
/// `(a*)_{jk} = Σ (α!)^{-1} ∂_ξ^α D_θ^α conj(a_{j'k'})`, `j' + α₁ = j`, `k' + α₂ = k`.
pub fn adjoint(a: &ClassicalBisingularSymbol, depth: (usize, usize)) -> Result<ClassicalBisingularSymbol> {
    check_depth(a, depth)?;
    let grid = a.grid();
    let order = a.order();
    let conj_order = super::BiOrder::complex(order.m1.conj(), order.m2.conj());
    let pairs: Vec<(usize, usize)> = (0..=depth.0).flat_map(|j| (0..=depth.1).map(move |k| (j, k))).collect();
    let multiplier = a.is_multiplier();
    let comps = par::map_slice(&pairs, |&(j, k)| {
        let mut out = vec![ZERO; grid.len()];
        for jp in 0..=j {
            for kp in 0..=k {
                let (a1, a2) = (j - jp, k - kp);
                if multiplier && (a1 > 0 || a2 > 0) {
                    continue;
                }
                let coef = falling_factorial(conj_order.m1 - jp as f64, a1)
                    * falling_factorial(conj_order.m2 - kp as f64, a2)
                    / (factorial(a1) * factorial(a2));
                let conj: Vec<Complex64> = a.component(jp, kp).unwrap().iter().map(|v| v.conj()).collect();
                let d = if a1 == 0 && a2 == 0 {
                    conj
                } else {
                    differentiate(&grid, &conj, a1, a2)
                };
                for (idx, o) in out.iter_mut().enumerate() {
                    *o += coef * omega_power(&grid, idx, a1, a2) * d[idx];
                }
            }
        }
        out
    });
    let mut out = ClassicalBisingularSymbol::from_flat(conj_order, depth, grid, comps, multiplier);
    if let Some(terms) = a.exact_terms() {
        if terms.iter().all(|t| t.base.is_none()) {
            let conj = terms
                .iter()
                .cloned()
                .map(|mut t| {
                    t.coeff = t.coeff.conj();
                    for f in t.factors.iter_mut() {
                        for s in f.0.iter_mut() {
                            s.power = s.power.conj();
                        }
                    }
                    t
                })
                .collect();
            out = out.with_exact_terms(conj);
        }
    }
    Ok(out)
}

/// Components of the resolvent parametrix in the scaled chart, where `mu`
/// is the value of `λ` on the product of unit cospheres.
pub(crate) fn parametrix_components(
    a: &ClassicalBisingularSymbol,
    mu: Complex64,
    depth: (usize, usize),
) -> Result<Vec<Vec<Complex64>>> {
    check_depth(a, depth)?;
    let grid = a.grid();
    let a00 = a.component(0, 0)?;
    let scale = 1.0 + mu.norm();
    let mut inv = Vec::with_capacity(grid.len());
    for v in a00 {
        let d = v - mu;
        if d.norm() <= 1e-12 * scale {
            return Err(Error::SingularResolvent { lambda: mu });
        }
        inv.push(1.0 / d);
    }
    let a = a.truncate(depth)?;
    let with_derivatives = !a.is_multiplier();
    let mut db = Derivatives::new(depth);
    let mut comps: Vec<Vec<Complex64>> = Vec::with_capacity((depth.0 + 1) * (depth.1 + 1));
    for j in 0..=depth.0 {
        for k in 0..=depth.1 {
            let b = if j == 0 && k == 0 {
                inv.clone()
            } else {
                let rest = composition_terms(&a, &db, j, k, true);
                rest.iter().zip(&inv).map(|(r, i)| -r * i).collect()
            };
            db.fill(&grid, j, k, &b, with_derivatives);
            comps.push(b);
        }
    }
    Ok(comps)
}

/// Parametrix `b(λ)` of `a - λ`: `(a - λ) ∘ b(λ) = 1` up to components of
/// bi-degree below `(-N1, -N2)` relative to the order. `λ` is given through
/// its value `mu` on the product of unit cospheres, i.e. it carries the
/// bi-degree `(m1, m2)` of `a`.
pub fn resolvent_parametrix(
    a: &ClassicalBisingularSymbol,
    mu: Complex64,
    depth: (usize, usize),
) -> Result<ClassicalBisingularSymbol> {
    let comps = parametrix_components(a, mu, depth)?;
    let order = a.order();
    Ok(ClassicalBisingularSymbol::from_flat(
        super::BiOrder::complex(-order.m1, -order.m2),
        depth,
        a.grid(),
        comps,
        a.is_multiplier(),
    ))
}

/// `(a - λ) ∘ b` with `λ` constant in `ξ` and given by its cosphere value
/// `mu`; the natural residual check for [`resolvent_parametrix`].
pub fn compose_shifted(
    a: &ClassicalBisingularSymbol,
    mu: Complex64,
    b: &ClassicalBisingularSymbol,
    depth: (usize, usize),
) -> Result<ClassicalBisingularSymbol> {
    let mut out = compose(a, b, depth)?;
    let (d1, d2) = depth;
    let mut flat = Vec::with_capacity((d1 + 1) * (d2 + 1));
    for j in 0..=d1 {
        for k in 0..=d2 {
            let bc = b.component(j, k)?;
            let c = out.component_mut(j, k)?;
            for (v, w) in c.iter_mut().zip(bc) {
                *v -= mu * w;
            }
            flat.push(c.clone());
        }
    }
    out = ClassicalBisingularSymbol::from_flat(out.order(), depth, a.grid(), flat, out.is_multiplier());
    Ok(out)
}
