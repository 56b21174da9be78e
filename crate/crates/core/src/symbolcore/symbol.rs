use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::exact::ExactTerm;
use super::grid::Grid;
use super::order::BiOrder;
use crate::{Error, Result};

/// Truncated classical bisingular symbol on `S¹ × S¹`.
///
/// Component `(j, k)` is the restriction to the product of cospheres of the
/// bihomogeneous term of bi-degree `(m1 - j, m2 - k)`; the full term is
/// `|ξ₁|^{m1-j} |ξ₂|^{m2-k} c_{jk}(θ₁, ω₁, θ₂, ω₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalBisingularSymbol {
    order: BiOrder,
    depth: (usize, usize),
    grid: Grid,
    components: Vec<Vec<Complex64>>,
    principal: Vec<Complex64>,
    multiplier: bool,
    exact: Option<Vec<ExactTerm>>,
}

impl ClassicalBisingularSymbol {
    /// Symbol from its component table, laid out as `components[j][k]`.
    pub fn new(
        order: BiOrder,
        grid: Grid,
        components: Vec<Vec<Vec<Complex64>>>,
        multiplier: bool,
    ) -> Result<Self> {
        if !order.is_finite() {
            return Err(Error::Parameter("symbol order must be finite".into()));
        }
        let n1 = components.len();
        let n2 = components.first().map_or(0, |r| r.len());
        if n1 == 0 || n2 == 0 || components.iter().any(|r| r.len() != n2) {
            return Err(Error::Parameter("component table must be a non-empty rectangle".into()));
        }
        let mut flat = Vec::with_capacity(n1 * n2);
        for row in components {
            for c in row {
                if c.len() != grid.len() {
                    return Err(Error::GridMismatch);
                }
                if c.iter().any(|v| !v.is_finite()) {
                    return Err(Error::Parameter("component values must be finite".into()));
                }
                flat.push(c);
            }
        }
        Ok(Self::from_flat(order, (n1 - 1, n2 - 1), grid, flat, multiplier))
    }

    pub(crate) fn from_flat(
        order: BiOrder,
        depth: (usize, usize),
        grid: Grid,
        components: Vec<Vec<Complex64>>,
        multiplier: bool,
    ) -> Self {
        let principal = components[0].clone();
        ClassicalBisingularSymbol {
            order,
            depth,
            grid,
            components,
            principal,
            multiplier,
            exact: None,
        }
    }

    /// Symbol whose `(j, k)` component is sampled from `f(j, k, θ₁, ω₁, θ₂, ω₂)`.
    pub fn from_fn<F>(order: BiOrder, depth: (usize, usize), grid: Grid, multiplier: bool, f: F) -> Self
    where
        F: Fn(usize, usize, f64, f64, f64, f64) -> Complex64,
    {
        let mut comps = Vec::with_capacity((depth.0 + 1) * (depth.1 + 1));
        for j in 0..=depth.0 {
            for k in 0..=depth.1 {
                comps.push(grid.from_fn(|t1, o1, t2, o2| f(j, k, t1, o1, t2, o2)));
            }
        }
        Self::from_flat(order, depth, grid, comps, multiplier)
    }

    pub fn identity(grid: Grid, depth: (usize, usize)) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), grid, depth)
    }

    pub fn constant(c: Complex64, grid: Grid, depth: (usize, usize)) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let mut s = Self::from_fn(BiOrder::new(0.0, 0.0), depth, grid, true, |j, k, _, _, _, _| {
            if j == 0 && k == 0 {
                c
            } else {
                zero
            }
        });
        s.exact = Some(vec![ExactTerm::new(c, Default::default(), Default::default())]);
        s
    }

    /// Tensor product of two one-factor classical expansions.
    ///
    /// `f1(j, θ, ω)` is the degree `m1 - j` component of the first factor,
    /// `f2(k, θ, ω)` the degree `m2 - k` component of the second.
    pub fn tensor<F1, F2>(order: BiOrder, depth: (usize, usize), grid: Grid, multiplier: bool, f1: F1, f2: F2) -> Self
    where
        F1: Fn(usize, f64, f64) -> Complex64,
        F2: Fn(usize, f64, f64) -> Complex64,
    {
        Self::from_fn(order, depth, grid, multiplier, |j, k, t1, o1, t2, o2| f1(j, t1, o1) * f2(k, t2, o2))
    }

    pub fn order(&self) -> BiOrder {
        self.order
    }

    pub fn depth(&self) -> (usize, usize) {
        self.depth
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn is_multiplier(&self) -> bool {
        self.multiplier
    }

    pub fn exact_terms(&self) -> Option<&[ExactTerm]> {
        self.exact.as_deref()
    }

    pub fn with_exact_terms(mut self, terms: Vec<ExactTerm>) -> Self {
        self.exact = Some(terms);
        self
    }

    /// Bi-degree of component `(j, k)`.
    pub fn degree(&self, j: usize, k: usize) -> (Complex64, Complex64) {
        self.order.degree(j, k)
    }

    #[inline]
    fn slot(&self, j: usize, k: usize) -> usize {
        j * (self.depth.1 + 1) + k
    }

    pub fn component(&self, j: usize, k: usize) -> Result<&[Complex64]> {
        if j > self.depth.0 || k > self.depth.1 {
            return Err(Error::Truncation {
                req1: j,
                req2: k,
                avail1: self.depth.0,
                avail2: self.depth.1,
            });
        }
        Ok(&self.components[self.slot(j, k)])
    }

    /// Mutable access to a component. Edits bypass the stored joint principal
    /// symbol, which is what [`super::compatibility_check`] compares against.
    pub fn component_mut(&mut self, j: usize, k: usize) -> Result<&mut Vec<Complex64>> {
        self.component(j, k)?;
        self.exact = None;
        let s = self.slot(j, k);
        Ok(&mut self.components[s])
    }

    /// Declared joint principal symbol `σ^{m1,m2}`.
    pub fn joint_principal(&self) -> &[Complex64] {
        &self.principal
    }

    /// The same symbol with fewer components.
    pub fn truncate(&self, depth: (usize, usize)) -> Result<Self> {
        if depth.0 > self.depth.0 || depth.1 > self.depth.1 {
            return Err(Error::Truncation {
                req1: depth.0,
                req2: depth.1,
                avail1: self.depth.0,
                avail2: self.depth.1,
            });
        }
        let mut comps = Vec::with_capacity((depth.0 + 1) * (depth.1 + 1));
        for j in 0..=depth.0 {
            for k in 0..=depth.1 {
                comps.push(self.components[self.slot(j, k)].clone());
            }
        }
        let mut out = Self::from_flat(self.order, depth, self.grid, comps, self.multiplier);
        out.principal = self.principal.clone();
        out.exact = self.exact.clone();
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        if self.order != other.order {
            return Err(Error::Order(format!(
                "cannot add symbols of orders {} and {}",
                self.order, other.order
            )));
        }
        let depth = (self.depth.0.min(other.depth.0), self.depth.1.min(other.depth.1));
        let a = self.truncate(depth)?;
        let b = other.truncate(depth)?;
        let comps = a
            .components
            .iter()
            .zip(&b.components)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| f(*u, *v)).collect())
            .collect();
        Ok(Self::from_flat(self.order, depth, self.grid, comps, self.multiplier && other.multiplier))
    }

    /// Sum of two symbols of equal order, truncated at the common depth.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.zip_with(other, |u, v| u + v)?;
        if let (Some(x), Some(y)) = (&self.exact, &other.exact) {
            out.exact = Some(x.iter().chain(y).cloned().collect());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.zip_with(other, |u, v| u - v)?;
        if let (Some(x), Some(y)) = (&self.exact, &other.exact) {
            let neg = y.iter().cloned().map(|mut t| {
                t.coeff = -t.coeff;
                t
            });
            out.exact = Some(x.iter().cloned().chain(neg).collect());
        }
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let comps = self
            .components
            .iter()
            .map(|v| v.iter().map(|x| x * c).collect())
            .collect();
        let mut out = Self::from_flat(self.order, self.depth, self.grid, comps, self.multiplier);
        out.principal = self.principal.iter().map(|x| x * c).collect();
        out.exact = self.exact.as_ref().map(|terms| {
            terms
                .iter()
                .cloned()
                .map(|mut t| {
                    t.coeff *= c;
                    t
                })
                .collect()
        });
        out
    }

    /// Relabel as a symbol of higher order with leading components zero.
    /// Used to add symbols whose orders differ by non-negative integers.
    pub fn lift(&self, order: BiOrder) -> Result<Self> {
        let d1 = order.m1 - self.order.m1;
        let d2 = order.m2 - self.order.m2;
        let shift = |d: Complex64| -> Option<usize> {
            (d.im == 0.0 && d.re >= 0.0 && d.re == d.re.round()).then_some(d.re as usize)
        };
        let (s1, s2) = match (shift(d1), shift(d2)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Order(format!(
                    "cannot lift order {} to {}",
                    self.order, order
                )))
            }
        };
        let depth = (self.depth.0 + s1, self.depth.1 + s2);
        let zero = vec![Complex64::new(0.0, 0.0); self.grid.len()];
        let mut comps = Vec::with_capacity((depth.0 + 1) * (depth.1 + 1));
        for j in 0..=depth.0 {
            for k in 0..=depth.1 {
                if j >= s1 && k >= s2 {
                    comps.push(self.components[self.slot(j - s1, k - s2)].clone());
                } else {
                    comps.push(zero.clone());
                }
            }
        }
        let mut out = Self::from_flat(order, depth, self.grid, comps, self.multiplier);
        out.exact = self.exact.clone();
        Ok(out)
    }

    /// Largest sup-norm over all components.
    pub fn sup_norm(&self) -> f64 {
        self.components
            .iter()
            .flat_map(|c| c.iter())
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    /// Bi-degree of the leading discarded component, `(m1 - N1 - 1, m2 - N2 - 1)`.
    pub fn truncation_certificate(&self) -> (Complex64, Complex64) {
        self.order.degree(self.depth.0 + 1, self.depth.1 + 1)
    }

    /// Evaluate the truncated expansion at a frequency with `ξ₁, ξ₂ ≠ 0`.
    pub fn eval_expansion(&self, i1: usize, i2: usize, xi1: f64, xi2: f64) -> Complex64 {
        let w1 = usize::from(xi1 < 0.0);
        let w2 = usize::from(xi2 < 0.0);
        let idx = self.grid.index(i1, w1, i2, w2);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..=self.depth.0 {
            for k in 0..=self.depth.1 {
                let (d1, d2) = self.degree(j, k);
                let r = Complex64::new(xi1.abs(), 0.0).powc(d1) * Complex64::new(xi2.abs(), 0.0).powc(d2);
                acc += r * self.components[self.slot(j, k)][idx];
            }
        }
        acc
    }
}

/// On-disk symbol format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymbolFile {
    pub order: OrderField,
    pub depth: [usize; 2],
    pub components: Vec<ComponentRecord>,
    pub multiplier: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderField {
    Real([f64; 2]),
    Complex([[f64; 2]; 2]),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub j: usize,
    pub k: usize,
    pub grid: [usize; 4],
    pub values: Vec<[f64; 2]>,
}

impl ClassicalBisingularSymbol {
    pub fn to_file(&self) -> SymbolFile {
        let order = if self.order.is_real() {
            OrderField::Real([self.order.m1.re, self.order.m2.re])
        } else {
            OrderField::Complex([
                [self.order.m1.re, self.order.m1.im],
                [self.order.m2.re, self.order.m2.im],
            ])
        };
        let mut components = Vec::new();
        for j in 0..=self.depth.0 {
            for k in 0..=self.depth.1 {
                components.push(ComponentRecord {
                    j,
                    k,
                    grid: self.grid.dims(),
                    values: self.components[self.slot(j, k)].iter().map(|v| [v.re, v.im]).collect(),
                });
            }
        }
        SymbolFile {
            order,
            depth: [self.depth.0, self.depth.1],
            components,
            multiplier: self.multiplier,
        }
    }

    pub fn from_file(file: &SymbolFile) -> Result<Self> {
        let order = match file.order {
            OrderField::Real([a, b]) => BiOrder::new(a, b),
            OrderField::Complex([a, b]) => {
                BiOrder::complex(Complex64::new(a[0], a[1]), Complex64::new(b[0], b[1]))
            }
        };
        let [d1, d2] = file.depth;
        let first = file
            .components
            .first()
            .ok_or_else(|| Error::Parameter("symbol file has no components".into()))?;
        let [g1, two_a, g2, two_b] = first.grid;
        if two_a != 2 || two_b != 2 {
            return Err(Error::Parameter("cosphere dimensions must be 2".into()));
        }
        let grid = Grid::new(g1, g2)?;
        let mut table: Vec<Vec<Option<Vec<Complex64>>>> = vec![vec![None; d2 + 1]; d1 + 1];
        for rec in &file.components {
            if rec.grid != first.grid {
                return Err(Error::GridMismatch);
            }
            if rec.j > d1 || rec.k > d2 {
                return Err(Error::Parameter(format!("component ({}, {}) beyond declared depth", rec.j, rec.k)));
            }
            table[rec.j][rec.k] = Some(rec.values.iter().map(|v| Complex64::new(v[0], v[1])).collect());
        }
        let mut comps = Vec::with_capacity(d1 + 1);
        for (j, row) in table.into_iter().enumerate() {
            let mut r = Vec::with_capacity(d2 + 1);
            for (k, c) in row.into_iter().enumerate() {
                r.push(c.ok_or_else(|| Error::Parameter(format!("missing component ({j}, {k})")))?);
            }
            comps.push(r);
        }
        Self::new(order, grid, comps, file.multiplier)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_file())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SymbolFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ClassicalBisingularSymbol {
        let g = Grid::square(16).unwrap();
        ClassicalBisingularSymbol::from_fn(BiOrder::new(1.0, -0.5), (2, 1), g, false, |j, k, t1, o1, t2, o2| {
            Complex64::new(1.0 + j as f64 + t1.cos() * o1, k as f64 * t2.sin() * o2)
        })
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let text = s.to_json().unwrap();
        assert!(text.contains("\"multiplier\":false"));
        let back = ClassicalBisingularSymbol::from_json(&text).unwrap();
        assert_eq!(back.order(), s.order());
        for j in 0..=2 {
            for k in 0..=1 {
                assert_eq!(back.component(j, k).unwrap(), s.component(j, k).unwrap());
            }
        }
    }

    #[test]
    fn degrees_follow_order() {
        let s = sample();
        assert_eq!(s.degree(2, 1), (Complex64::new(-1.0, 0.0), Complex64::new(-1.5, 0.0)));
        assert!(s.component(3, 0).is_err());
    }

    #[test]
    fn lift_and_add() {
        let g = Grid::square(16).unwrap();
        let one = ClassicalBisingularSymbol::identity(g, (1, 1));
        let lifted = one.lift(BiOrder::new(1.0, 0.0)).unwrap();
        assert_eq!(lifted.depth(), (2, 1));
        assert!(lifted.component(0, 0).unwrap().iter().all(|v| v.norm() == 0.0));
        assert!(lifted.component(1, 0).unwrap().iter().all(|v| *v == Complex64::new(1.0, 0.0)));
    }
}
