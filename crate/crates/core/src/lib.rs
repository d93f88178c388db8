//! Exact invariant theory for discrete subgroups of `O(n,1)`, finite
//! orthogonal groups and lattice translations.
//!
//! The crate computes and verifies Hilbert bases of polynomial invariant
//! rings, Molien series and equivariants, and hosts numeric demonstrations
//! of where smooth invariant theory departs from the polynomial one.

pub mod error;
pub mod invariant;
pub mod exactnum;
pub mod lorentz;
pub mod matrix;
pub mod polyring;
pub mod regime;

pub use error::{Error, Result};
