//! Numerical spectral invariants of tensor-product (bisingular)
//! pseudodifferential operators on the two-torus model.
//!
//! The crate is organized around six building blocks:
//!
//! * [`symbolcore`]: truncated classical bisingular symbols on
//!   `S¹ × S¹`, their composition, adjoints, resolvent parametrices and
//!   Λ-ellipticity checks.
//! * [`spectra`]: model operators with explicitly enumerable spectra.
//! * [`meromorphic`]: Hurwitz-zeta based continuation of ζ, η, the double
//!   ζ-function and the spectral cuts, Laurent extraction and pole tables.
//! * [`wodzicki`]: bisingular Wodzicki residues by the spectral definition
//!   and by cosphere quadrature.
//! * [`cpowers`]: complex powers by resolvent contour integrals.
//! * [`canonical_trace`]: the finite-part canonical trace for non-integer
//!   bi-orders.
//!
//! Data-parallel inner loops (contour nodes, quadrature grids, property
//! suites) run on rayon when the `parallel` feature is enabled and fall back
//! to plain iterators otherwise.

pub mod canonical_trace;
pub mod cpowers;
pub mod error;
pub mod meromorphic;
pub mod par;
pub mod quadrature;
pub mod report;
pub mod spectra;
pub mod suites;
pub mod symbolcore;
pub mod wodzicki;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
