use serde::Serialize;

use super::frame::{generator_frame, invariant_in_frame};
use crate::error::{Error, Result};
use crate::exactnum::BoostScalar;
use crate::lorentz::{GroupGenerator, GroupKind, GroupSpec};
use crate::polyring::{Poly, PolyMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    /// Index of the first generator that moves the polynomial.
    pub failing_generator: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub equivariant: bool,
    pub failing_generator: Option<usize>,
}

/// Generators the group is generated by: for Lorentz kinds the single
/// product of the listed factors.
pub fn effective_generators(spec: &GroupSpec) -> Result<Vec<GroupGenerator>> {
    if spec.is_lorentz() {
        let a = spec.lorentz_generator()?;
        Ok(vec![GroupGenerator {
            matrix: a.entries().clone(),
            rotations: a.rotations().to_vec(),
        }])
    } else {
        Ok(spec.generators.clone())
    }
}

/// `p ∘ g = p` for one generator. Generators with structural rotations or a
/// Minkowski boost block are checked in diagonalising coordinates, where
/// each monomial is only rescaled; the rest by direct substitution.
pub fn invariant_under(p: &Poly<BoostScalar>, gen: &GroupGenerator, lorentz: bool) -> Result<bool> {
    if p.nvars() != gen.dim() {
        return Err(Error::Shape(format!(
            "polynomial in {} variables, group acts on R^{}",
            p.nvars(),
            gen.dim()
        )));
    }
    let gf = generator_frame(gen, lorentz)?;
    if gf.frame.planes.is_empty() && gf.frame.cone.is_none() {
        return Ok(p.substitute_linear(&gen.matrix)? == *p);
    }
    invariant_in_frame(p, &gf)
}

pub fn is_invariant(p: &Poly<BoostScalar>, spec: &GroupSpec) -> Result<InvarianceReport> {
    if spec.kind == GroupKind::LatticeTranslation {
        let rank = spec.dim;
        if p.nvars() != rank {
            return Err(Error::Shape(format!(
                "polynomial in {} variables for a rank {rank} lattice",
                p.nvars()
            )));
        }
        for i in 0..rank {
            if p.translate(i, &BoostScalar::from_int(1))? != *p {
                return Ok(InvarianceReport {
                    invariant: false,
                    failing_generator: Some(i),
                });
            }
        }
        return Ok(InvarianceReport {
            invariant: true,
            failing_generator: None,
        });
    }
    for (k, g) in effective_generators(spec)?.iter().enumerate() {
        if !invariant_under(p, g, spec.signature.is_some())? {
            return Ok(InvarianceReport {
                invariant: false,
                failing_generator: Some(k),
            });
        }
    }
    Ok(InvarianceReport {
        invariant: true,
        failing_generator: None,
    })
}

/// `F(Ax) = A F(x)` for every generator `A`.
pub fn check_equivariant(f: &PolyMap<BoostScalar>, spec: &GroupSpec) -> Result<EquivarianceReport> {
    if f.len() != f.nvars() {
        return Err(Error::Shape("equivariant maps must be square".into()));
    }
    if spec.kind == GroupKind::LatticeTranslation {
        return Err(Error::Unsupported("equivariance under translations".into()));
    }
    if f.nvars() != spec.dim {
        return Err(Error::Shape(format!(
            "map on R^{}, group acts on R^{}",
            f.nvars(),
            spec.dim
        )));
    }
    for (k, g) in effective_generators(spec)?.iter().enumerate() {
        if !g.rotations.is_empty() {
            return Err(Error::Unsupported(
                "equivariance under structural rotations".into(),
            ));
        }
        if f.substitute_linear(&g.matrix)? != f.left_mul(&g.matrix)? {
            return Ok(EquivarianceReport {
                equivariant: false,
                failing_generator: Some(k),
            });
        }
    }
    Ok(EquivarianceReport {
        equivariant: true,
        failing_generator: None,
    })
}
