mod continuation;
mod hurwitz;
mod identity;
mod laurent;
mod poles;
mod zeta;

pub use continuation::{direct_signed_sums, signed_sums, SignedSums};
pub use hurwitz::{gamma, hurwitz_zeta};
pub use identity::{residue_identity_check, ResidueIdentityReport};
pub use laurent::{laurent_at, LaurentExpansion, DEFAULT_NODES, MIN_NODES};
pub use poles::{laurent_in_chart, laurent_in_chart_with, poles_table, poles_table_with, predicted_poles, Chart, PoleEntry, PoleReport, SpectralFunction, Window};
pub use zeta::{
    diagonal_double_zeta, double_zeta, eta, literal_cut_identity, spectral_cut_identity, spectral_cut_zeta, zeta,
    CutDirection,
};
