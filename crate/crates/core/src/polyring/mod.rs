//! Multivariate polynomials, linear substitution, gradients and
//! degree-bounded subalgebra membership.

mod linalg;
mod membership;
mod poly;

pub use linalg::{rank, solve, PolySpan};
pub use membership::{
    graded_span, membership, membership_with_cap, MembershipResult, Witness, DEFAULT_PRODUCT_CAP};
pub use poly::{as_rational_poly, lift_rational, variable_names, Monomial, Poly, PolyMap};
