use num_complex::Complex64;
use thiserror::Error;

use crate::meromorphic::LaurentExpansion;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("truncation error: requested depth ({req1}, {req2}) exceeds available ({avail1}, {avail2})")]
    Truncation {
        req1: usize,
        req2: usize,
        avail1: usize,
        avail2: usize,
    },

    #[error("symbols live on different grids")]
    GridMismatch,

    #[error("invalid grid size {0}: must be a power of two >= 16")]
    InvalidGrid(usize),

    #[error("resolvent is singular: lambda = {lambda} meets the principal symbol range")]
    SingularResolvent { lambda: Complex64 },

    #[error("assumption violated: {0}")]
    Assumption(String),

    #[error("pole of order {} at z = {z}", laurent.pole_order(1e-9))]
    Pole {
        z: Complex64,
        laurent: Box<LaurentExpansion>,
    },

    #[error("pole at s = 1 of the Hurwitz zeta function")]
    HurwitzPole,

    #[error("model is not invertible: {0}")]
    NonInvertible(String),

    #[error("operator has a zero eigenvalue")]
    Kernel,

    #[error("model has no torus symbol: {0}")]
    NoTorusSymbol(String),

    #[error("unsupported model: {0}")]
    Unsupported(String),

    #[error("order error: {0}")]
    Order(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("contour geometry: {0}")]
    Geometry(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
