//! Invariance and equivariance checks, Reynolds averaging, Molien series
//! and Hilbert bases.

mod basis;
mod check;
mod frame;
mod reynolds;

pub use basis::{
    hilbert_basis, hilbert_basis_finite, hilbert_basis_involution, hilbert_basis_lorentz,
    HilbertBasis, Provenance,
};
pub use check::{
    check_equivariant, effective_generators, invariant_under, is_invariant, EquivarianceReport,
    InvarianceReport,
};
pub use reynolds::{molien, reynolds, MolienSeries};
