use crate::{Error, Result};

/// Radial compactification `ξ ↦ (ξ/⟨ξ⟩, 1/⟨ξ⟩)`, `⟨ξ⟩ = (1 + |ξ|²)^{1/2}`.
///
/// Returns the point of the closed upper hemisphere as `(z, z0)`.
pub fn rc_map(xi: &[f64]) -> (Vec<f64>, f64) {
    let japanese = (1.0 + xi.iter().map(|x| x * x).sum::<f64>()).sqrt();
    (xi.iter().map(|x| x / japanese).collect(), 1.0 / japanese)
}

/// Inverse of [`rc_map`] on the open hemisphere: `z / z0`.
pub fn rc_inverse(z0: f64, z: &[f64]) -> Result<Vec<f64>> {
    if !(z0 > 0.0) {
        return Err(Error::Domain(format!("rc_inverse needs z0 > 0, got {z0}")));
    }
    Ok(z.iter().map(|x| x / z0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_maps_to_pole() {
        let (z, z0) = rc_map(&[0.0]);
        assert_eq!(z, vec![0.0]);
        assert_eq!(z0, 1.0);
    }

    #[test]
    fn sqrt_three_has_height_half() {
        let (z, z0) = rc_map(&[3f64.sqrt()]);
        assert!((z0 - 0.5).abs() < 1e-15);
        assert!((z[0] * z[0] + z0 * z0 - 1.0).abs() < 1e-15);
        let back = rc_inverse(0.5, &[3f64.sqrt() / 2.0]).unwrap();
        assert!((back[0] - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn nonpositive_height_is_a_domain_error() {
        assert!(matches!(rc_inverse(0.0, &[1.0]), Err(Error::Domain(_))));
        assert_eq!(rc_inverse(1.0, &[0.0]).unwrap(), vec![0.0]);
    }
}
