//! Truncated classical bisingular symbols on the model geometry `S¹ × S¹`.

mod calculus;
mod compactification;
mod ellipticity;
mod exact;
mod grid;
mod order;
mod random;
mod symbol;

pub use calculus::{
    adjoint, commutator, compatibility_check, compose, compose_shifted, falling_factorial, principal_symbols,
    resolvent_parametrix, PrincipalSymbols,
};
pub(crate) use calculus::parametrix_components;
pub use compactification::{rc_inverse, rc_map};
pub use ellipticity::{lambda_elliptic_check, EllipticityReport, EllipticityWitness, Sector, LATTICE_MODES};
pub(crate) use ellipticity::joint_quotient;
pub use exact::{CircleFactor, ExactTerm, ShiftedPower};
pub use grid::{check_grid_size, derivative_matrix, differentiate, omega, Grid, DEFAULT_GRID};
pub use order::BiOrder;
pub use random::{random_positive_elliptic, random_symbol, random_symbol_of_order, RANDOM_TRIG_DEGREE};
pub use symbol::{ClassicalBisingularSymbol, ComponentRecord, OrderField, SymbolFile};

/// Default truncation depth `(N1, N2)`.
pub const DEFAULT_DEPTH: (usize, usize) = (4, 4);
