//! Elements and discrete subgroups of `O(n,1)`, finite closures and the
//! split-complex model of the Minkowski plane.

mod block;
mod element;
mod finite;
mod group;
mod involution;
mod splitcomplex;

pub use block::{detect_block_structure, BlockForm};
pub use element::{
    boost_in, hyperbolic_rotation, kappa_x, kappa_y, rational_matrix, turns_to_f64, validate,
    validate_tagged, Component, LorentzMatrix, MinkowskiForm, RotationTag, SIGN_PROBE_BETAS,
};
pub use finite::{
    enumerate_finite, matrix_order, turn_order, FiniteElement, FiniteGroup, GroupGenerator,
    DEFAULT_GROUP_CAP,
};
pub use group::{matrix_to_json, parse_lorentz_matrix, GroupKind, GroupParameters, GroupSpec};
pub use involution::{involution_family, involution_normal_form, NormalForm, Reflection};
pub use splitcomplex::SplitComplex;
