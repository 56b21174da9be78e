use std::fmt;
use std::ops::Add;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Bi-order `(m1, m2)` of a bisingular symbol.
///
/// Orders are complex so that complex powers `A^z`, whose components have
/// bi-degree `(m1 z - j, m2 z - k)`, share the representation with ordinary
/// real-order symbols.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiOrder {
    pub m1: Complex64,
    pub m2: Complex64,
}

impl BiOrder {
    pub fn new(m1: f64, m2: f64) -> Self {
        BiOrder {
            m1: Complex64::new(m1, 0.0),
            m2: Complex64::new(m2, 0.0),
        }
    }

    pub fn complex(m1: Complex64, m2: Complex64) -> Self {
        BiOrder { m1, m2 }
    }

    pub fn is_real(&self) -> bool {
        self.m1.im == 0.0 && self.m2.im == 0.0
    }

    /// Real parts, the orders that govern the symbol estimates.
    pub fn re(&self) -> (f64, f64) {
        (self.m1.re, self.m2.re)
    }

    /// Bi-degree of the `(j, k)` component.
    pub fn degree(&self, j: usize, k: usize) -> (Complex64, Complex64) {
        (self.m1 - j as f64, self.m2 - k as f64)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        BiOrder {
            m1: self.m1 * z,
            m2: self.m2 * z,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.m1.is_finite() && self.m2.is_finite()
    }
}

impl Add for BiOrder {
    type Output = BiOrder;

    fn add(self, rhs: BiOrder) -> BiOrder {
        BiOrder {
            m1: self.m1 + rhs.m1,
            m2: self.m2 + rhs.m2,
        }
    }
}

impl fmt::Display for BiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "({}, {})", self.m1.re, self.m2.re)
        } else {
            write!(f, "({}, {})", self.m1, self.m2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_add_exactly() {
        let a = BiOrder::new(0.5, -1.0);
        let b = BiOrder::new(0.25, 2.0);
        assert_eq!(a + b, BiOrder::new(0.75, 1.0));
        assert_eq!(a.degree(1, 2), (Complex64::new(-0.5, 0.0), Complex64::new(-3.0, 0.0)));
    }
}
