mod common;

use bispec::meromorphic::{
    double_zeta, eta, hurwitz_zeta, laurent_at, literal_cut_identity, poles_table, spectral_cut_identity, zeta, Chart,
    SpectralFunction, Window,
};
use bispec::spectra::{make_model, ModelKind, SpectralOperator};
use bispec::C64;
use common::{abs_lattice_zeta, c, hurwitz, residue_estimate, signed_lattice_zeta};
use proptest::prelude::*;

fn model(kind: ModelKind) -> SpectralOperator {
    make_model(kind).unwrap()
}

fn close(x: C64, y: C64, tol: f64) -> bool {
    (x - y).norm() <= tol * y.norm().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hurwitz_matches_euler_maclaurin(re in -3.0f64..4.0, im in 0.05f64..3.0, a in 0.05f64..0.95) {
        let s = C64::new(re, im);
        let v = hurwitz_zeta(s, a).unwrap();
        prop_assert!(close(v, hurwitz(s, a), 1e-10), "{v} vs {}", hurwitz(s, a));
    }

    #[test]
    fn zeta_of_abs_dirac(re in -2.5f64..2.5, im in 0.1f64..2.0, a in 0.05f64..0.95) {
        let z = C64::new(re, im);
        let v = zeta(&model(ModelKind::abs_circle_dirac(a)), z).unwrap();
        prop_assert!(close(v, abs_lattice_zeta(-z, a), 1e-9));
    }

    #[test]
    fn eta_of_dirac_and_of_tensors(re in -2.0f64..2.5, im in 0.1f64..2.0, a in 0.05f64..0.95, b in 0.05f64..0.95) {
        let z = C64::new(re, im);
        let v = eta(&model(ModelKind::circle_dirac(a)), z).unwrap();
        prop_assert!(close(v, signed_lattice_zeta(z, a), 1e-9));
        let t = model(ModelKind::tensor(ModelKind::circle_dirac(a), ModelKind::circle_dirac(b)));
        let expect = signed_lattice_zeta(z, a) * signed_lattice_zeta(z, b);
        prop_assert!(close(eta(&t, z).unwrap(), expect, 1e-9));
    }

    #[test]
    fn corrected_cut_identity(re in -1.5f64..2.5, im in 0.2f64..1.5, a in 0.05f64..0.95) {
        let z = C64::new(re, im);
        for op in [model(ModelKind::circle_dirac(a)), model(ModelKind::tensor(ModelKind::circle_dirac(a), ModelKind::abs_circle_dirac(0.5)))] {
            let (lhs, rhs) = spectral_cut_identity(&op, z).unwrap();
            prop_assert!(close(lhs, rhs, 1e-9), "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn double_zeta_factorizes(zr in 0.2f64..3.0, tr in 0.2f64..3.0, a in 0.1f64..0.9) {
        let (z, tau) = (C64::new(zr, 0.3), C64::new(tr, -0.2));
        let b = model(ModelKind::tensor(
            ModelKind::AbsCircleDirac { a, power: -1.0 },
            ModelKind::AbsCircleDirac { a, power: -1.0 },
        ));
        let q = model(ModelKind::abs_circle_dirac(a));
        let v = double_zeta(&b, &q, &q, z, tau).unwrap();
        let expect = abs_lattice_zeta(1.0 + z, a) * abs_lattice_zeta(1.0 + tau, a);
        prop_assert!(close(v, expect, 1e-9));
    }
}

#[test]
fn eta_at_origin_is_one_minus_two_a() {
    for a in [0.1, 0.25, 1.0 / 3.0, 0.5, 0.8] {
        let v = eta(&model(ModelKind::circle_dirac(a)), c(0.0)).unwrap();
        assert!((v - (1.0 - 2.0 * a)).norm() < 1e-10, "a = {a}: {v}");
    }
}

#[test]
fn zeta_at_minus_two_is_pi_squared() {
    let v = zeta(&model(ModelKind::abs_circle_dirac(0.5)), c(-2.0)).unwrap();
    assert!((v - std::f64::consts::PI.powi(2)).norm() < 1e-10);
}

#[test]
fn simple_pole_residue_matches_oracle() {
    let op = model(ModelKind::abs_circle_dirac(0.3));
    let r = poles_table(&op, SpectralFunction::Zeta, Chart::Az, &Window::new(-3.0, 3.0, -0.5, 0.5).unwrap(), 1e-8).unwrap();
    let e = r.entry_near(c(-1.0)).unwrap();
    let oracle = residue_estimate(|z| abs_lattice_zeta(-z, 0.3), c(-1.0), 1e-4);
    assert!((e.c1 - oracle).norm() < 1e-6, "{} vs {oracle}", e.c1);
}

#[test]
fn coincident_first_poles_give_a_double_pole() {
    let op = model(ModelKind::tensor(ModelKind::abs_circle_dirac(0.5), ModelKind::abs_circle_dirac(0.5)));
    let r = poles_table(&op, SpectralFunction::Zeta, Chart::Az, &Window::new(-1.5, 0.5, -0.1, 0.1).unwrap(), 1e-8).unwrap();
    let e = r.entry_near(c(-1.0)).unwrap();
    assert_eq!(e.order, 2);
    assert!((e.c2 - 4.0).norm() < 1e-8);
}

#[test]
fn orders_one_and_two_give_simple_leading_poles() {
    let op = model(ModelKind::tensor(
        ModelKind::abs_circle_dirac(0.5),
        ModelKind::AbsCircleDirac { a: 0.5, power: 2.0 },
    ));
    let r = poles_table(&op, SpectralFunction::Zeta, Chart::Az, &Window::new(-1.2, 0.2, -0.1, 0.1).unwrap(), 1e-8).unwrap();
    for z in [-1.0, -0.5] {
        let e = r.entry_near(c(z)).unwrap_or_else(|| panic!("no pole at {z}: {r:?}"));
        assert_eq!(e.order, 1, "{e:?}");
    }
}

#[test]
fn dirac_tensor_eta_is_regular_at_zero() {
    for a in [0.25, 1.0 / 3.0, 0.5] {
        for b in [0.25, 1.0 / 3.0, 0.5] {
            let op = model(ModelKind::tensor(ModelKind::circle_dirac(a), ModelKind::circle_dirac(b)));
            let l = laurent_at(|z| eta(&op, z), c(0.0), 0.4, 128, 2).unwrap();
            assert!(l.c_minus2().norm() < 1e-8 && l.c_minus1().norm() < 1e-8);
            // the oracle product of two entire functions
            let expect = signed_lattice_zeta(c(0.0), a) * signed_lattice_zeta(c(0.0), b);
            assert!((l.c0() - expect).norm() < 1e-9);
        }
    }
}

#[test]
fn literal_form_of_cut_identity_fails_for_positive_operators() {
    let op = model(ModelKind::abs_circle_dirac(0.5));
    let z = C64::new(0.5, 0.7);
    let (lhs, rhs) = literal_cut_identity(&op, z).unwrap();
    assert!((lhs - rhs).norm() > 1e-3);
}
