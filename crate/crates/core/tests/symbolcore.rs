mod common;

use bispec::spectra::{exact_symbol_with, make_model, ModelKind};
use bispec::suites::principal_multiplicativity;
use bispec::symbolcore::{
    adjoint, compatibility_check, compose, lambda_elliptic_check, random_positive_elliptic, random_symbol, rc_inverse,
    rc_map, resolvent_parametrix, compose_shifted, BiOrder, ClassicalBisingularSymbol, Grid, Sector,
};
use bispec::C64;
use common::c;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> Grid {
    Grid::square(16).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rc_round_trip(xi in proptest::collection::vec(-1e4f64..1e4, 1..4)) {
        let (z, z0) = rc_map(&xi);
        prop_assert!(z0 > 0.0 && z0 <= 1.0);
        let norm: f64 = z.iter().map(|v| v * v).sum::<f64>() + z0 * z0;
        prop_assert!((norm - 1.0).abs() < 1e-12);
        let back = rc_inverse(z0, &z).unwrap();
        let scale = xi.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (x, y) in xi.iter().zip(&back) {
            prop_assert!((x - y).abs() / scale < 1e-12);
        }
    }

    #[test]
    fn calculus_on_random_symbols(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_symbol(&mut rng, grid(), (3, 3));
        let b = random_symbol(&mut rng, grid(), (3, 3));
        prop_assert!(compatibility_check(&a).1 < 1e-12);
        let ab = compose(&a, &b, (3, 3)).unwrap();
        prop_assert!(compatibility_check(&ab).1 < 1e-12);
        prop_assert!(principal_multiplicativity(&a, &b).unwrap() < 1e-10);
        let back = adjoint(&adjoint(&a, (3, 3)).unwrap(), (3, 3)).unwrap();
        prop_assert!(back.sub(&a).unwrap().sup_norm() < 1e-9);
        // (ab)* = b* a*
        let lhs = adjoint(&ab, (3, 3)).unwrap();
        let rhs = compose(&adjoint(&b, (3, 3)).unwrap(), &adjoint(&a, (3, 3)).unwrap(), (3, 3)).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().sup_norm() < 1e-8 * ab.sup_norm().max(1.0));
    }
}

#[test]
fn composition_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let d = (3, 3);
    let (a, b, e) = (random_symbol(&mut rng, grid(), d), random_symbol(&mut rng, grid(), d), random_symbol(&mut rng, grid(), d));
    let left = compose(&compose(&a, &b, d).unwrap(), &e, d).unwrap();
    let right = compose(&a, &compose(&b, &e, d).unwrap(), d).unwrap();
    assert!(left.sub(&right).unwrap().sup_norm() < 1e-8 * left.sup_norm().max(1.0));
}

#[test]
fn multiplier_composition_is_the_product_of_multipliers() {
    // |D_a| ∘ |D_a|^{-1} ⊗ D_b = 1 ⊗ D_b
    let d = (4, 4);
    let x = exact_symbol_with(&make_model(ModelKind::tensor(ModelKind::abs_circle_dirac(0.3), ModelKind::circle_dirac(0.25))).unwrap(), grid(), d).unwrap();
    let y = exact_symbol_with(
        &make_model(ModelKind::tensor(ModelKind::AbsCircleDirac { a: 0.3, power: -1.0 }, ModelKind::AbsCircleDirac { a: 0.25, power: 0.0 })).unwrap(),
        grid(),
        d,
    )
    .unwrap();
    let p = compose(&x, &y, d).unwrap();
    let g = grid();
    for idx in 0..g.len() {
        let (_, o1, _, o2) = g.point(idx);
        // D_b expansion: ω|ξ| + b
        assert!((p.component(0, 0).unwrap()[idx] - o2).norm() < 1e-12);
        assert!((p.component(0, 1).unwrap()[idx] - 0.25).norm() < 1e-12);
        assert!(p.component(1, 0).unwrap()[idx].norm() < 1e-12, "{o1}");
    }
}

#[test]
fn parametrix_inverts_modulo_depth() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let d = (3, 3);
    let mu = C64::new(-2.0, 0.5);
    let a = random_positive_elliptic(&mut rng, grid(), d, BiOrder::new(1.0, 1.0));
    let r = resolvent_parametrix(&a, mu, d).unwrap();
    let prod = compose_shifted(&a, mu, &r, d).unwrap();
    let id = ClassicalBisingularSymbol::identity(grid(), d);
    assert!(prod.sub(&id).unwrap().sup_norm() < 1e-10);
    // at order (0, 0) λ folds into the leading component and plain composition applies
    let a0 = random_positive_elliptic(&mut rng, grid(), d, BiOrder::new(0.0, 0.0));
    let mut shifted = a0.clone();
    shifted.component_mut(0, 0).unwrap().iter_mut().for_each(|v| *v -= mu);
    let r0 = resolvent_parametrix(&a0, mu, d).unwrap();
    let err = compose(&shifted, &r0, d).unwrap().sub(&id).unwrap().sup_norm();
    assert!(err < 1e-10, "{err}");
}

#[test]
fn positive_symbols_are_lambda_elliptic_off_the_half_line() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let a = random_positive_elliptic(&mut rng, grid(), (2, 2), BiOrder::new(1.0, 1.0));
    let r = lambda_elliptic_check(&a, &Sector::left(std::f64::consts::FRAC_PI_4), 10.0).unwrap();
    assert!(r.pass);
    let n = a.scale(c(-1.0));
    assert!(!lambda_elliptic_check(&n, &Sector::left(std::f64::consts::FRAC_PI_4), 10.0).unwrap().pass);
}

#[test]
fn json_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random_symbol(&mut rng, grid(), (2, 1));
    let back = ClassicalBisingularSymbol::from_json(&a.to_json().unwrap()).unwrap();
    assert!(back.sub(&a).unwrap().sup_norm() == 0.0);
    assert_eq!(back.order(), a.order());
}
