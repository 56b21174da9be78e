mod common;

use bispec::spectra::{make_model, ModelKind, SpectralOperator};
use common::dirac_modes;
use proptest::prelude::*;

fn model(kind: ModelKind) -> SpectralOperator {
    make_model(kind).unwrap()
}

/// Sorted `(value, multiplicity)` pairs with `|value| <= bound` from a raw list.
fn tally(mut raw: Vec<f64>, bound: f64) -> Vec<(f64, u64)> {
    raw.retain(|v| v.abs() <= bound);
    raw.sort_by(|x, y| x.total_cmp(y));
    let mut out: Vec<(f64, u64)> = Vec::new();
    for v in raw {
        match out.last_mut() {
            Some((w, m)) if (*w - v).abs() < 1e-12 => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tensor_spectrum_matches_mode_lattice(a in 0.05f64..0.95, b in 0.05f64..0.95) {
        let op = model(ModelKind::tensor(ModelKind::circle_dirac(a), ModelKind::abs_circle_dirac(b)));
        let bound = 6.0;
        let got = op.spectrum_up_to(bound).unwrap();
        // every product within the bound has each factor below bound / (smallest mode)
        let k_max = (bound / a.min(1.0 - a).min(b).min(1.0 - b)).ceil() as i64 + 2;
        let raw: Vec<f64> = dirac_modes(a, k_max)
            .iter()
            .flat_map(|u| dirac_modes(b, k_max).into_iter().map(move |v| u * v.abs()))
            .collect();
        let mut expect = tally(raw, bound);
        let mut got: Vec<(f64, u64)> = got.iter().map(|d| (d.value, d.multiplicity)).collect();
        got.sort_by(|x, y| x.0.total_cmp(&y.0));
        expect.sort_by(|x, y| x.0.total_cmp(&y.0));
        prop_assert_eq!(got.len(), expect.len());
        for (g, e) in got.iter().zip(&expect) {
            prop_assert!((g.0 - e.0).abs() < 1e-12 && g.1 == e.1, "{:?} vs {:?}", g, e);
        }
    }
}

#[test]
fn eigenvalues_come_in_modulus_order() {
    let op = model(ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::circle_dirac(1.0 / 3.0)));
    let data = op.eigenvalues(30).unwrap();
    assert!(data.windows(2).all(|w| w[0].value.abs() <= w[1].value.abs()));
    assert!(data.iter().all(|d| d.sign as f64 == d.value.signum()));
}

#[test]
fn oscillator_multiplicities() {
    let op = model(ModelKind::HarmonicOscillator { n: 3 });
    let data = op.eigenvalues(4).unwrap();
    let expect = [(3.0, 1), (5.0, 3), (7.0, 6), (9.0, 10)];
    for (d, (v, m)) in data.iter().zip(expect) {
        assert_eq!((d.value, d.multiplicity), (v, m));
    }
}

#[test]
fn invalid_models_are_rejected() {
    assert!(make_model(ModelKind::circle_dirac(1.0)).is_err());
    assert!(make_model(ModelKind::TorusLaplacianShift { c: 0.0 }).is_err());
}

#[test]
fn negation_flips_the_spectrum() {
    let op = model(ModelKind::negated(ModelKind::abs_circle_dirac(0.5)));
    assert!(op.eigenvalues(6).unwrap().iter().all(|d| d.value < 0.0));
    assert!(op.is_self_adjoint() && !op.is_positive());
}

#[test]
fn descriptor_json_round_trip() {
    let op = model(ModelKind::tensor(ModelKind::circle_dirac(0.25), ModelKind::HarmonicOscillator { n: 2 }));
    let back = SpectralOperator::from_json(&op.to_json().unwrap()).unwrap();
    assert_eq!(back, op);
}
