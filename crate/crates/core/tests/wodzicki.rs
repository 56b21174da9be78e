mod common;

use bispec::spectra::{exact_symbol_with, make_model, ModelKind, SpectralOperator};
use bispec::symbolcore::{random_symbol, BiOrder, ClassicalBisingularSymbol, Grid};
use bispec::wodzicki::{
    commutator_residue, projection_residue, wres2_quadrature, wres_spectral, ProjectionInput, Route,
};
use bispec::C64;
use common::{abs_lattice_zeta, c};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model(kind: ModelKind) -> SpectralOperator {
    make_model(kind).unwrap()
}

fn grid() -> Grid {
    Grid::square(16).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn commutators_have_no_second_residue(seed in 0u64..100_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_symbol(&mut rng, grid(), (4, 4));
        let b = random_symbol(&mut rng, grid(), (4, 4));
        prop_assert!(commutator_residue(&a, &b).unwrap().value.norm() < 1e-6);
    }

    #[test]
    fn routes_agree_on_inverse_abs_tensors(a in 0.1f64..0.9, b in 0.1f64..0.9) {
        let op = model(ModelKind::tensor(
            ModelKind::AbsCircleDirac { a, power: -1.0 },
            ModelKind::AbsCircleDirac { a: b, power: -1.0 },
        ));
        let q = model(ModelKind::abs_circle_dirac(0.5));
        let spectral = wres_spectral(&op, &q, &q, 2).unwrap().value;
        let quad = wres2_quadrature(&exact_symbol_with(&op, grid(), (4, 4)).unwrap()).unwrap().value;
        prop_assert!((spectral - quad).norm() < 1e-6);
        prop_assert!((quad - 4.0).norm() < 1e-10);
    }
}

#[test]
fn spectral_residue_matches_hurwitz_oracle() {
    // Res² at 0 of Σ|k+a|^{-1-z} Σ|k+b|^{-1-z}: each factor has residue 2 at z = 0
    let op = model(ModelKind::tensor(
        ModelKind::AbsCircleDirac { a: 0.25, power: -1.0 },
        ModelKind::AbsCircleDirac { a: 1.0 / 3.0, power: -1.0 },
    ));
    let q1 = model(ModelKind::abs_circle_dirac(0.25));
    let q2 = model(ModelKind::abs_circle_dirac(1.0 / 3.0));
    let r = wres_spectral(&op, &q1, &q2, 2).unwrap();
    let eps = 1e-5;
    let oracle = eps * eps * abs_lattice_zeta(c(1.0 + eps), 0.25) * abs_lattice_zeta(c(1.0 + eps), 1.0 / 3.0);
    assert!((r.value - oracle).norm() < 1e-3, "{} vs {oracle}", r.value);
    assert!((r.value - 4.0).norm() < 1e-8);
}

#[test]
fn quadrature_is_the_cosphere_average_of_the_residue_component() {
    // (-1,-1) component θ-dependent: Wres² = Σ_ω mean_θ
    let g = grid();
    let s = ClassicalBisingularSymbol::from_fn(BiOrder::new(-1.0, -1.0), (1, 1), g, false, |j, k, t1, o1, t2, o2| {
        if j == 0 && k == 0 {
            c(1.0 + 0.5 * t1.cos() + 0.25 * (t2 + o1).sin() + 0.1 * o2)
        } else {
            c(0.0)
        }
    });
    let r = wres2_quadrature(&s).unwrap();
    assert_eq!(r.route, Route::Quadrature);
    // Σ_{ω1,ω2} [1 + 0.1 ω2] = 4
    assert!((r.value - 4.0).norm() < 1e-12, "{}", r.value);
}

#[test]
fn random_pairs_with_seed_42() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let a = random_symbol(&mut rng, grid(), (4, 4));
        let b = random_symbol(&mut rng, grid(), (4, 4));
        assert!(commutator_residue(&a, &b).unwrap().value.norm() < 1e-6);
    }
}

#[test]
fn idempotents_have_vanishing_residue() {
    let op = model(ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(0.25)));
    // eigenvalues 1/16 (simple), -3/16 (double), ...
    assert!(projection_residue(&ProjectionInput::FiniteRank { op: op.clone(), modes: 2 }).is_err());
    for modes in [1, 3] {
        let r = projection_residue(&ProjectionInput::FiniteRank { op: op.clone(), modes }).unwrap();
        assert_eq!(r.value, C64::new(0.0, 0.0));
        assert!(r.certificate < 1e-8);
    }
    let not_idempotent = exact_symbol_with(&op, grid(), (4, 4)).unwrap();
    assert!(projection_residue(&ProjectionInput::Symbol(not_idempotent)).is_err());
}
