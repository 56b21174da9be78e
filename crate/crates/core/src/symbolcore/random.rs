use num_complex::Complex64;
use rand::Rng;

use super::grid::Grid;
use super::order::BiOrder;
use super::symbol::ClassicalBisingularSymbol;

/// Highest Fourier mode in the random test symbols.
pub const RANDOM_TRIG_DEGREE: i32 = 2;

/// Trigonometric polynomial of degree `RANDOM_TRIG_DEGREE` in `(θ₁, θ₂)`
/// with coefficients drawn separately for each `(ω₁, ω₂)`.
fn random_component<R: Rng + ?Sized>(rng: &mut R, grid: &Grid, scale: f64) -> Vec<Complex64> {
    let d = RANDOM_TRIG_DEGREE;
    let side = (2 * d + 1) as usize;
    let coeffs: Vec<Complex64> = (0..4 * side * side)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale)
        .collect();
    (0..grid.len())
        .map(|idx| {
            let (i1, w1, i2, w2) = grid.split(idx);
            let (t1, t2) = (grid.theta1(i1), grid.theta2(i2));
            let base = (w1 * 2 + w2) * side * side;
            let mut acc = Complex64::new(0.0, 0.0);
            for p1 in -d..=d {
                for p2 in -d..=d {
                    let c = coeffs[base + ((p1 + d) as usize) * side + (p2 + d) as usize];
                    acc += c * Complex64::from_polar(1.0, p1 as f64 * t1 + p2 as f64 * t2);
                }
            }
            acc
        })
        .collect()
}

/// Random x-dependent classical symbol with integer orders in `{-1, 0, 1}`.
pub fn random_symbol<R: Rng + ?Sized>(rng: &mut R, grid: Grid, depth: (usize, usize)) -> ClassicalBisingularSymbol {
    let m1 = rng.gen_range(-1..=1) as f64;
    let m2 = rng.gen_range(-1..=1) as f64;
    random_symbol_of_order(rng, grid, depth, BiOrder::new(m1, m2))
}

pub fn random_symbol_of_order<R: Rng + ?Sized>(
    rng: &mut R,
    grid: Grid,
    depth: (usize, usize),
    order: BiOrder,
) -> ClassicalBisingularSymbol {
    let mut comps = Vec::with_capacity((depth.0 + 1) * (depth.1 + 1));
    for j in 0..=depth.0 {
        for k in 0..=depth.1 {
            let scale = 1.0 / (1 + j + k) as f64;
            comps.push(random_component(rng, &grid, scale));
        }
    }
    ClassicalBisingularSymbol::from_flat(order, depth, grid, comps, false)
}

/// Random symbol whose leading component is real with values in `[1, 3]`
/// and whose lower components are small, so it is elliptic with respect to
/// any sector avoiding the positive half-line.
pub fn random_positive_elliptic<R: Rng + ?Sized>(
    rng: &mut R,
    grid: Grid,
    depth: (usize, usize),
    order: BiOrder,
) -> ClassicalBisingularSymbol {
    let mut s = random_symbol_of_order(rng, grid, depth, order);
    let lead = random_component(rng, &grid, 1.0);
    let bound = lead.iter().map(|v| v.re.abs()).fold(0.0, f64::max).max(1e-12);
    let c = s.component_mut(0, 0).expect("leading component");
    for (v, l) in c.iter_mut().zip(&lead) {
        *v = Complex64::new(2.0 + l.re / bound, 0.0);
    }
    for j in 0..=depth.0 {
        for k in 0..=depth.1 {
            if j + k > 0 {
                s.component_mut(j, k).unwrap().iter_mut().for_each(|v| *v *= 0.1);
            }
        }
    }
    ClassicalBisingularSymbol::from_flat(order, depth, grid, flatten(&s), false)
}

pub(crate) fn flatten(s: &ClassicalBisingularSymbol) -> Vec<Vec<Complex64>> {
    let (d1, d2) = s.depth();
    let mut out = Vec::with_capacity((d1 + 1) * (d2 + 1));
    for j in 0..=d1 {
        for k in 0..=d2 {
            out.push(s.component(j, k).unwrap().to_vec());
        }
    }
    out
}
