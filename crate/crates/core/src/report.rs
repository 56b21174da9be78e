//! Verification records shared by the check suites and the command line.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Serialize a complex number as `[re, im]`.
pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// One compared pair of numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    #[serde(with = "complex_pair")]
    pub lhs: Complex64,
    #[serde(with = "complex_pair")]
    pub rhs: Complex64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default)]
    pub certificates: serde_json::Map<String, serde_json::Value>,
}

impl CheckRecord {
    /// Absolute comparison `|lhs - rhs| < tolerance`.
    pub fn compare(check: impl Into<String>, lhs: Complex64, rhs: Complex64, tolerance: f64) -> Self {
        let pass = (lhs - rhs).norm() < tolerance;
        CheckRecord {
            check: check.into(),
            lhs,
            rhs,
            tolerance,
            pass,
            certificates: serde_json::Map::new(),
        }
    }

    /// A check that could not be evaluated; recorded as a failure.
    pub fn failed(check: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = CheckRecord {
            check: check.into(),
            lhs: Complex64::new(f64::NAN, f64::NAN),
            rhs: Complex64::new(f64::NAN, f64::NAN),
            tolerance: 0.0,
            pass: false,
            certificates: serde_json::Map::new(),
        };
        r.certificates.insert("error".into(), reason.into().into());
        r
    }

    pub fn discrepancy(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    pub fn with_certificate(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.certificates.insert(key.into(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.into(),
            pass,
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// JSON value for a complex number.
pub fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let r = CheckRecord::compare("x", Complex64::new(1.0, 0.5), Complex64::new(1.0, 0.5), 1e-9)
            .with_certificate("nodes", 64);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"lhs\":[1.0,0.5]"));
        let back: CheckRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(r.pass);
    }

    #[test]
    fn empty_suite_does_not_pass() {
        assert!(!SuiteReport::new("s", vec![]).pass);
    }
}
