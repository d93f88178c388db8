use num_traits::{One, Signed, Zero};

use super::element::{LorentzMatrix, RotationTag};
use crate::error::{Error, Result};
use crate::exactnum::{BoostScalar, Rational};
use crate::matrix::Matrix;

/// `A = R ⊕ H` with `R ∈ O(n-1)` rational (plus structural rotations) and
/// `H` a hyperbolic rotation on the last two coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockForm {
    /// Rational part of `R`, the identity on tagged planes.
    pub rotation: Matrix<Rational>,
    pub rotation_tags: Vec<RotationTag>,
    pub boost: Matrix<BoostScalar>,
    /// `e^β = c * s^k` read off the boost block.
    pub exp_beta: (Rational, i64),
}

impl BlockForm {
    /// Dimension `n - 1` of the rotation block.
    pub fn rotation_dim(&self) -> usize {
        self.rotation.nrows()
    }

    pub fn is_zero_boost(&self) -> bool {
        self.exp_beta.0.is_one() && self.exp_beta.1 == 0
    }

    /// Whether the rotation block acts trivially.
    pub fn rotation_is_identity(&self) -> bool {
        self.rotation.is_identity() && self.rotation_tags.iter().all(|t| t.order == 1)
    }
}

/// Recognise the literal block form `[[R, 0], [0, H_β]]`.
pub fn detect_block_structure(a: &LorentzMatrix) -> Result<BlockForm> {
    let n = a.n();
    let m = a.entries();
    let r = n - 1;
    for i in 0..n + 1 {
        for j in 0..n + 1 {
            if (i < r) != (j < r) && !m.get(i, j).is_zero() {
                return Err(Error::NotBlock(format!("off-diagonal entry ({i},{j}) is nonzero")));
            }
        }
    }
    for tag in a.rotations() {
        if tag.plane.0 >= r || tag.plane.1 >= r {
            return Err(Error::NotBlock(format!(
                "rotation plane {:?} meets the Minkowski block",
                tag.plane
            )));
        }
    }
    let rotation = m
        .block(0, 0, r, r)
        .try_map(BoostScalar::as_rational)
        .ok_or_else(|| Error::NotBlock("rotation block has boost-dependent entries".into()))?;
    if !rotation.transpose().mul(&rotation)?.is_identity() {
        return Err(Error::NotBlock("rotation block is not orthogonal".into()));
    }
    let boost = m.block(r, r, 2, 2);
    let (p, q) = (boost.get(0, 0), boost.get(0, 1));
    if boost.get(1, 0) != q || boost.get(1, 1) != p {
        return Err(Error::NotBlock("Minkowski block is not a hyperbolic rotation".into()));
    }
    let sum = p + q;
    let exp_beta = sum
        .as_unit()
        .filter(|(c, _)| c.is_positive())
        .ok_or_else(|| Error::NotBlock(format!("cosh + sinh = {sum} is not e^beta")))?;
    Ok(BlockForm {
        rotation,
        rotation_tags: a.rotations().to_vec(),
        boost,
        exp_beta,
    })
}
