//! Numeric and exact demonstrations around the boost group and cocompact
//! translation lattices: the gap function, orbit separation in light-cone
//! coordinates, translation triviality and torus reconstruction.

mod cocompact;
mod lightcone;
mod torus;

pub use cocompact::{cocompact_triviality, numeric_translation_check, random_polynomial, TrivialityVerdict};
pub use lightcone::{
    gap_g, schwarz_gap_report, separate_orbits, BranchValues, GapReport, LightConePoint,
    OrbitReason, OrbitVerdict, STEP_WINDOW,
};
pub use torus::{
    harmonic, sigma, torus_reconstruct, torus_variable_names, FourierSpec, FourierTerm,
    ReconstructionResult, DEFAULT_BAND_CAP,
};
