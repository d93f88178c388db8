//! Exact scalars: rationals, Laurent polynomials in the boost unit
//! `s = e^(beta/2)`, their fraction field, and Gaussian extensions.

mod boost;
mod coeff;
mod fraction;
mod gaussian;
mod rational;
mod univariate;

pub use boost::BoostScalar;
pub use coeff::{Coeff, Field, Scalar};
pub use fraction::BoostFraction;
pub use gaussian::Gaussian;
pub use rational::{
    format_rational, int, parse_rational, rat, rational_sqrt, rational_to_f64, Rational,
};
pub use univariate::UniPoly;
