use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One factor `sign(ξ + a)^s |ξ + a|^p` of an exact circle multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftedPower {
    pub a: f64,
    pub power: Complex64,
    pub signed: bool,
}

impl ShiftedPower {
    pub fn eval(&self, xi: f64) -> Complex64 {
        let x = xi + self.a;
        let mag = Complex64::new(x.abs(), 0.0).powc(self.power);
        if self.signed && x < 0.0 {
            -mag
        } else {
            mag
        }
    }
}

/// Product of shifted powers in one circle variable; the empty product is 1.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CircleFactor(pub Vec<ShiftedPower>);

impl CircleFactor {
    pub fn identity() -> Self {
        CircleFactor(Vec::new())
    }

    pub fn single(a: f64, power: Complex64, signed: bool) -> Self {
        CircleFactor(vec![ShiftedPower { a, power, signed }])
    }

    pub fn eval(&self, xi: f64) -> Complex64 {
        self.0.iter().map(|f| f.eval(xi)).product()
    }

    /// Total homogeneity degree.
    pub fn degree(&self) -> Complex64 {
        self.0.iter().map(|f| f.power).sum()
    }

    /// Product of two factors, merging equal shifts.
    pub fn mul(&self, other: &CircleFactor) -> CircleFactor {
        let mut out = self.0.clone();
        for f in &other.0 {
            match out.iter_mut().find(|g| g.a == f.a) {
                Some(g) => {
                    g.power += f.power;
                    g.signed ^= f.signed;
                }
                None => out.push(*f),
            }
        }
        out.retain(|g| g.power != Complex64::new(0.0, 0.0) || g.signed);
        out.sort_by(|x, y| x.a.total_cmp(&y.a));
        CircleFactor(out)
    }

    /// Coefficients `e_j` of the large-`|ξ|` expansion
    /// `Σ_j e_j |ξ|^{d-j}` on the half-line `sign(ξ) = omega`.
    pub fn expansion(&self, omega: f64, terms: usize) -> Vec<Complex64> {
        let mut acc = vec![Complex64::new(0.0, 0.0); terms];
        acc[0] = Complex64::new(1.0, 0.0);
        for f in &self.0 {
            // |ξ + a|^p = |ξ|^p (1 + aω/|ξ|)^p, sign(ξ + a) = ω for |ξ| > |a|
            let ratio = f.a * omega;
            let mut series = vec![Complex64::new(0.0, 0.0); terms];
            let mut binom = Complex64::new(1.0, 0.0);
            for (j, s) in series.iter_mut().enumerate() {
                *s = binom * ratio.powi(j as i32);
                binom *= (f.power - j as f64) / (j as f64 + 1.0);
            }
            if f.signed && omega < 0.0 {
                series.iter_mut().for_each(|s| *s = -*s);
            }
            let mut next = vec![Complex64::new(0.0, 0.0); terms];
            for i in 0..terms {
                for j in 0..terms - i {
                    next[i + j] += acc[i] * series[j];
                }
            }
            acc = next;
        }
        acc
    }
}

/// Exact multiplier term `coeff · b(θ₁, θ₂) · f₁(ξ₁) · f₂(ξ₂)`.
///
/// `base` holds `b` on the `n1 × n2` base grid (row-major in `θ₁, θ₂`);
/// `None` means `b ≡ 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactTerm {
    pub coeff: Complex64,
    pub base: Option<Vec<Complex64>>,
    pub factors: [CircleFactor; 2],
}

impl ExactTerm {
    pub fn new(coeff: Complex64, f1: CircleFactor, f2: CircleFactor) -> Self {
        ExactTerm {
            coeff,
            base: None,
            factors: [f1, f2],
        }
    }

    pub fn base_mean(&self) -> Complex64 {
        match &self.base {
            None => Complex64::new(1.0, 0.0),
            Some(b) => b.iter().sum::<Complex64>() / b.len() as f64,
        }
    }

    pub fn eval(&self, xi1: f64, xi2: f64) -> Complex64 {
        self.coeff * self.factors[0].eval(xi1) * self.factors[1].eval(xi2)
    }

    /// Product of two x-independent terms.
    pub fn mul(&self, other: &ExactTerm) -> Option<ExactTerm> {
        if self.base.is_some() || other.base.is_some() {
            return None;
        }
        Some(ExactTerm::new(
            self.coeff * other.coeff,
            self.factors[0].mul(&other.factors[0]),
            self.factors[1].mul(&other.factors[1]),
        ))
    }
}
