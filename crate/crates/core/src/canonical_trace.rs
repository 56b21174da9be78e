//! Canonical trace `TRb` on non-integer bi-orders, computed as the finite
//! part of the frequency-lattice sum of the symbol on the diagonal.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::meromorphic::{hurwitz_zeta, laurent_at};
use crate::symbolcore::{CircleFactor, ClassicalBisingularSymbol, ExactTerm};
use crate::wodzicki::{merge_terms, wres2_quadrature};
use crate::{par, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Expansion terms subtracted per factor on the exact multiplier path.
pub const DEFAULT_EXPANSION_TERMS: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinitePartValue {
    pub value: Complex64,
    pub subtracted_terms: (usize, usize),
    pub certificate: f64,
}

/// Regularized diagonal density on the `n1 × n2` base grid (row-major).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityField {
    pub n1: usize,
    pub n2: usize,
    pub values: Vec<Complex64>,
    pub subtracted_terms: (usize, usize),
    pub certificate: f64,
}

impl DensityField {
    pub fn mean(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.values.len() as f64
    }
}

fn forbidden_degree(d: Complex64) -> bool {
    d.im == 0.0 && d.re >= -1.0 && d.re == d.re.round()
}

fn check_order(m1: Complex64, m2: Complex64) -> Result<()> {
    for (slot, m) in [(1, m1), (2, m2)] {
        if forbidden_degree(m) {
            return Err(Error::Order(format!(
                "TRb is undefined for the integer order {} in slot {slot}",
                m.re
            )));
        }
    }
    Ok(())
}

/// Finite part of `Σ_{k∈ℤ} f(k)`: direct sum over `|k| <= K` plus the
/// Hurwitz-continued tails `Σ_j e_j(±) ζ_H(j - d, K + 1)`.
/// Returns the value and the size of the first omitted tail term.
fn lattice_finite_part(f: &CircleFactor, terms: usize) -> Result<(Complex64, f64)> {
    let shift = f.0.iter().map(|s| s.a.abs()).fold(0.0, f64::max);
    let k_max = (4.0 * shift).ceil().max(32.0) as i64;
    let mut direct = ZERO;
    for k in -k_max..=k_max {
        if f.0.iter().any(|s| k as f64 + s.a == 0.0) {
            return Err(Error::Domain(format!("multiplier is singular at ξ = {k}")));
        }
        direct += f.eval(k as f64);
    }
    let d = f.degree();
    let start = (k_max + 1) as f64;
    let ep = f.expansion(1.0, terms + 1);
    let em = f.expansion(-1.0, terms + 1);
    let mut tail = ZERO;
    for j in 0..terms {
        let e = ep[j] + em[j];
        if e != ZERO {
            tail += e * hurwitz_zeta(j as f64 - d, start)?;
        }
    }
    let e = ep[terms] + em[terms];
    let next = if e == ZERO {
        0.0
    } else {
        (e * hurwitz_zeta(terms as f64 - d, start)?).norm()
    };
    Ok((direct + tail, next))
}

fn exact_density(
    a: &ClassicalBisingularSymbol,
    terms: &[ExactTerm],
    n: (usize, usize),
) -> Result<DensityField> {
    let grid = a.grid();
    let len = grid.n1 * grid.n2;
    let mut values = vec![ZERO; len];
    let mut certificate: f64 = 0.0;
    for t in merge_terms(terms) {
        if t.coeff == ZERO {
            continue;
        }
        check_order(t.factors[0].degree(), t.factors[1].degree())?;
        let (fp1, r1) = lattice_finite_part(&t.factors[0], n.0)?;
        let (fp2, r2) = lattice_finite_part(&t.factors[1], n.1)?;
        let scale = t.coeff * fp1 * fp2;
        certificate += t.coeff.norm() * (r1 * fp2.norm() + r2 * fp1.norm() + r1 * r2);
        match &t.base {
            None => values.iter_mut().for_each(|v| *v += scale),
            Some(b) => {
                if b.len() != len {
                    return Err(Error::GridMismatch);
                }
                values.iter_mut().zip(b).for_each(|(v, x)| *v += scale * x);
            }
        }
    }
    Ok(DensityField {
        n1: grid.n1,
        n2: grid.n2,
        values,
        subtracted_terms: n,
        certificate,
    })
}

/// `FP Σ_q c(sign q) max(|q|,1)^d = c(+)(1 + ζ(-d)) + c(-)ζ(-d)`.
fn excised_weights(d: Complex64) -> Result<[Complex64; 2]> {
    let z = hurwitz_zeta(-d, 1.0)?;
    Ok([1.0 + z, z])
}

fn expansion_density(a: &ClassicalBisingularSymbol, n: (usize, usize)) -> Result<DensityField> {
    let order = a.order();
    check_order(order.m1, order.m2)?;
    let (d1, d2) = a.depth();
    if n.0 > d1 || n.1 > d2 {
        return Err(Error::Truncation {
            req1: n.0,
            req2: n.1,
            avail1: d1,
            avail2: d2,
        });
    }
    let grid = a.grid();
    let w1: Vec<[Complex64; 2]> = (0..=d1).map(|j| excised_weights(order.m1 - j as f64)).collect::<Result<_>>()?;
    let w2: Vec<[Complex64; 2]> = (0..=d2).map(|k| excised_weights(order.m2 - k as f64)).collect::<Result<_>>()?;
    // contribution of component (j, k) at base point (i1, i2)
    let term = |j: usize, k: usize, i1: usize, i2: usize| -> Complex64 {
        let c = a.component(j, k).expect("depth checked");
        let mut acc = ZERO;
        for s1 in 0..2 {
            for s2 in 0..2 {
                acc += c[grid.index(i1, s1, i2, s2)] * w1[j][s1] * w2[k][s2];
            }
        }
        acc
    };
    let cells: Vec<(usize, usize)> = (0..grid.n1).flat_map(|i1| (0..grid.n2).map(move |i2| (i1, i2))).collect();
    let out = par::map_slice(&cells, |&(i1, i2)| {
        let mut v = ZERO;
        for j in 0..=n.0 {
            for k in 0..=n.1 {
                v += term(j, k, i1, i2);
            }
        }
        // size of the first omitted row/column, or of the last kept one
        let (jr, kr) = ((n.0 + 1).min(d1), (n.1 + 1).min(d2));
        let mut cert: f64 = 0.0;
        for k in 0..=n.1 {
            cert = cert.max(term(jr, k, i1, i2).norm());
        }
        for j in 0..=n.0 {
            cert = cert.max(term(j, kr, i1, i2).norm());
        }
        (v, cert)
    });
    Ok(DensityField {
        n1: grid.n1,
        n2: grid.n2,
        values: out.iter().map(|x| x.0).collect(),
        subtracted_terms: n,
        certificate: out.iter().map(|x| x.1).fold(0.0, f64::max),
    })
}

/// Regularized diagonal density of `op(a)`.
///
/// Exact multipliers use the lattice finite part with `(N1, N2)` subtracted
/// expansion terms. Other symbols are read as the excised quantization of
/// their truncated expansion (components `j <= N1`, `k <= N2`), whose
/// lattice finite part is a ζ-weighted sum of the components.
pub fn kernel_difference_density(a: &ClassicalBisingularSymbol, n1: usize, n2: usize) -> Result<DensityField> {
    match a.exact_terms() {
        Some(terms) => exact_density(a, terms, (n1, n2)),
        None => expansion_density(a, (n1, n2)),
    }
}

/// `TRb(a)`: the mean of the regularized density over the base torus.
pub fn trb(a: &ClassicalBisingularSymbol) -> Result<FinitePartValue> {
    let n = if a.exact_terms().is_some() {
        (DEFAULT_EXPANSION_TERMS, DEFAULT_EXPANSION_TERMS)
    } else {
        a.depth()
    };
    trb_with(a, n.0, n.1)
}

pub fn trb_with(a: &ClassicalBisingularSymbol, n1: usize, n2: usize) -> Result<FinitePartValue> {
    let d = kernel_difference_density(a, n1, n2)?;
    Ok(FinitePartValue {
        value: d.mean(),
        subtracted_terms: d.subtracted_terms,
        certificate: d.certificate,
    })
}

/// Double residue of `z ↦ TRb(family(z))` at `z0` and `Wres²` of the member at `z0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyResidue {
    pub z0: f64,
    pub residue: Complex64,
    pub wres2: Complex64,
    /// `+1` when `residue ≈ Wres²`, `-1` when `residue ≈ -Wres²`, `0` otherwise.
    pub sign: i8,
    pub discrepancy: f64,
}

/// `Res²_{z=z0} TRb(family(z))` on the diagonal family, compared with `±Wres²`.
pub fn trb_family_residue<F>(family: F, z0: f64, tol: f64) -> Result<FamilyResidue>
where
    F: Fn(Complex64) -> Result<ClassicalBisingularSymbol> + Sync + Send,
{
    let center = Complex64::new(z0, 0.0);
    let l = laurent_at(|z| Ok(trb(&family(z)?)?.value), center, 0.4, 128, 2)?;
    let residue = l.c_minus2();
    let wres2 = wres2_quadrature(&family(center)?)?.value;
    let (plus, minus) = ((residue - wres2).norm(), (residue + wres2).norm());
    let sign = if wres2.norm() <= tol && residue.norm() <= tol {
        1
    } else if plus < tol {
        1
    } else if minus < tol {
        -1
    } else {
        0
    };
    Ok(FamilyResidue {
        z0,
        residue,
        wres2,
        sign,
        discrepancy: plus.min(minus),
    })
}
