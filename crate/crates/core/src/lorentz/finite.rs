use std::collections::HashSet;

use num_traits::Zero;

use super::element::{check_identity_on, RotationTag};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, BoostScalar, Rational};
use crate::matrix::Matrix;

/// Default cap on the size of an enumerated closure.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// A generator: a matrix times commuting structural rotations on coordinate
/// planes where the matrix is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupGenerator {
    pub matrix: Matrix<BoostScalar>,
    pub rotations: Vec<RotationTag>,
}

impl GroupGenerator {
    pub fn matrix(matrix: Matrix<BoostScalar>) -> Self {
        Self {
            matrix,
            rotations: vec![],
        }
    }

    pub fn rotation(dim: usize, tag: RotationTag) -> Self {
        Self {
            matrix: Matrix::identity(dim),
            rotations: vec![tag],
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Floating matrix at rapidity `beta`, rotations included.
    pub fn to_f64(&self, beta: f64) -> Result<Vec<Vec<f64>>> {
        let dim = self.dim();
        let turns: Vec<_> = self.rotations.iter().map(|t| (t.plane, t.turn())).collect();
        let r = super::element::turns_to_f64(dim, &turns);
        let mut m = vec![vec![0.0; dim]; dim];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                for (k, rk) in r[i].iter().enumerate() {
                    *v += rk * self.matrix.get(k, j).eval_numeric(beta)?;
                }
            }
        }
        Ok(m)
    }
}

/// One group element `R(turns) · matrix`; `turns[p]` is the rotation of
/// plane `p` in units of a full turn, reduced to `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteElement {
    pub matrix: Matrix<BoostScalar>,
    pub turns: Vec<Rational>,
}

impl FiniteElement {
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.mul(&other.matrix)?,
            turns: self
                .turns
                .iter()
                .zip(&other.turns)
                .map(|(a, b)| reduce_turn(a + b))
                .collect(),
        })
    }

    fn sort_key(&self) -> String {
        let mut key: Vec<String> = self.matrix.entries().map(|(_, _, v)| v.to_string()).collect();
        key.extend(self.turns.iter().map(format_rational));
        key.join(",")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.turns.iter().all(Zero::is_zero)
    }
}

fn reduce_turn(t: Rational) -> Rational {
    let f = t.floor();
    t - f
}

/// A finite group given by all of its elements.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    dim: usize,
    planes: Vec<(usize, usize)>,
    elements: Vec<FiniteElement>,
}

impl FiniteGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Oriented rotation planes `(i, j)` with `i < j`.
    pub fn planes(&self) -> &[(usize, usize)] {
        &self.planes
    }

    pub fn elements(&self) -> &[FiniteElement] {
        &self.elements
    }

    pub fn has_rotations(&self) -> bool {
        !self.planes.is_empty()
    }

    /// Axes not covered by any rotation plane.
    pub fn free_axes(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|i| !self.planes.iter().any(|&(a, b)| a == *i || b == *i))
            .collect()
    }

    /// Distinct matrix parts, in enumeration order.
    pub fn matrix_parts(&self) -> Vec<Matrix<BoostScalar>> {
        let mut seen = HashSet::new();
        self.elements
            .iter()
            .filter(|e| seen.insert(e.matrix.clone()))
            .map(|e| e.matrix.clone())
            .collect()
    }

    /// Distinct rotation parts, in enumeration order.
    pub fn turn_parts(&self) -> Vec<Vec<Rational>> {
        let mut seen = HashSet::new();
        self.elements
            .iter()
            .filter(|e| seen.insert(e.turns.clone()))
            .map(|e| e.turns.clone())
            .collect()
    }

    /// Whether the group is the full product of its matrix and rotation
    /// parts, so averages over it factor.
    pub fn is_direct_product(&self) -> bool {
        self.matrix_parts().len() * self.turn_parts().len() == self.order()
    }

    /// Floating matrices of all elements, for numeric cross-checks.
    pub fn to_f64(&self, beta: f64) -> Result<Vec<Vec<Vec<f64>>>> {
        self.elements
            .iter()
            .map(|e| {
                let turns: Vec<_> = self.planes.iter().copied().zip(e.turns.iter().cloned()).collect();
                let g = GroupGenerator {
                    matrix: e.matrix.clone(),
                    rotations: vec![],
                };
                let m = g.to_f64(beta)?;
                let r = super::element::turns_to_f64(self.dim, &turns);
                Ok((0..self.dim)
                    .map(|i| {
                        (0..self.dim)
                            .map(|j| (0..self.dim).map(|k| r[i][k] * m[k][j]).sum())
                            .collect()
                    })
                    .collect())
            })
            .collect()
    }

    /// Closure check: every product of two elements is listed.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&FiniteElement> = self.elements.iter().collect();
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| a.mul(b).map(|c| set.contains(&c)).unwrap_or(false))
        })
    }
}

/// Enumerate the group generated by `gens` acting on `R^dim`, breadth-first
/// from the identity with ties inside a layer broken by entry order.
pub fn enumerate_finite(dim: usize, gens: &[GroupGenerator], cap: usize) -> Result<FiniteGroup> {
    let mut planes: Vec<(usize, usize)> = Vec::new();
    for g in gens {
        if g.dim() != dim || !g.matrix.is_square() {
            return Err(Error::Shape(format!("generator is not {dim}x{dim}")));
        }
        for t in &g.rotations {
            let p = (t.plane.0.min(t.plane.1), t.plane.0.max(t.plane.1));
            if p.1 >= dim {
                return Err(Error::Shape(format!("rotation plane {p:?} outside R^{dim}")));
            }
            if !planes.contains(&p) {
                if planes.iter().any(|q| q.0 == p.0 || q.0 == p.1 || q.1 == p.0 || q.1 == p.1) {
                    return Err(Error::Unsupported("rotation planes share an axis".into()));
                }
                planes.push(p);
            }
        }
    }
    planes.sort();
    let mut mask = vec![false; dim];
    for &(i, j) in &planes {
        mask[i] = true;
        mask[j] = true;
    }
    let lifted: Vec<FiniteElement> = gens
        .iter()
        .map(|g| {
            check_identity_on(&g.matrix, &mask)?;
            let mut turns = vec![Rational::zero(); planes.len()];
            for t in &g.rotations {
                let p = (t.plane.0.min(t.plane.1), t.plane.0.max(t.plane.1));
                let idx = planes.iter().position(|q| *q == p).expect("collected above");
                let signed = if p == t.plane { t.turn() } else { -t.turn() };
                turns[idx] = reduce_turn(&turns[idx] + signed);
            }
            Ok(FiniteElement {
                matrix: g.matrix.clone(),
                turns,
            })
        })
        .collect::<Result<_>>()?;

    let identity = FiniteElement {
        matrix: Matrix::identity(dim),
        turns: vec![Rational::zero(); planes.len()],
    };
    let mut seen: HashSet<FiniteElement> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity.clone()];
    let mut layer = vec![identity];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for e in &layer {
            for g in &lifted {
                let c = e.mul(g)?;
                if !seen.contains(&c) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(c.clone());
                    next.push(c);
                }
            }
        }
        next.sort_by_cached_key(FiniteElement::sort_key);
        elements.extend(next.iter().cloned());
        layer = next;
    }
    Ok(FiniteGroup {
        dim,
        planes,
        elements,
    })
}

/// The order of a rational orthogonal matrix, if finite and at most `cap`.
pub fn matrix_order(m: &Matrix<BoostScalar>, cap: usize) -> Result<usize> {
    let mut acc = m.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Ok(k);
        }
        acc = acc.mul(m)?;
    }
    Err(Error::CapExceeded { cap })
}

/// Order of a rotation turn `t` (reduced), i.e. the denominator.
pub fn turn_order(t: &Rational) -> usize {
    let r = reduce_turn(t.clone());
    if r.is_zero() {
        1
    } else {
        r.denom().to_string().parse().unwrap_or(usize::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::element::{hyperbolic_rotation, kappa_x, rational_matrix};
    use crate::lorentz::involution::{involution_family, Reflection};

    #[test]
    fn reflection_group() {
        let g = enumerate_finite(2, &[GroupGenerator::matrix(kappa_x())], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.elements()[0].is_identity());
        assert_eq!(g.elements()[1].matrix, kappa_x());
        assert!(g.is_closed());
    }

    #[test]
    fn structural_rotation() {
        let tag = RotationTag::new(3, (0, 1)).unwrap();
        let g = enumerate_finite(2, &[GroupGenerator::rotation(2, tag)], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.planes(), &[(0, 1)]);
        assert!(g.is_closed());
        // reversed orientation generates the same group
        let rev = RotationTag::new(3, (1, 0)).unwrap();
        let h = enumerate_finite(2, &[GroupGenerator::rotation(2, rev)], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(h.order(), 3);
    }

    #[test]
    fn boost_is_infinite() {
        let r = enumerate_finite(2, &[GroupGenerator::matrix(hyperbolic_rotation(1))], 500);
        assert_eq!(r, Err(Error::CapExceeded { cap: 500 }));
    }

    #[test]
    fn boosted_involution_has_order_two() {
        let f = involution_family(Reflection::KappaY, 1);
        let g = enumerate_finite(2, &[GroupGenerator::matrix(f)], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn mixed_generators() {
        let tag = RotationTag::new(4, (0, 1)).unwrap();
        let flip = rational_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let g = enumerate_finite(
            3,
            &[GroupGenerator::rotation(3, tag), GroupGenerator::matrix(flip.clone())],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_direct_product());
        assert_eq!(g.free_axes(), vec![2]);
        // a single diagonal generator gives a non-product subgroup
        let diag = GroupGenerator {
            matrix: flip,
            rotations: vec![RotationTag::new(2, (0, 1)).unwrap()],
        };
        let d = enumerate_finite(3, &[diag], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(d.order(), 2);
        assert!(!d.is_direct_product());
        let bad = GroupGenerator {
            matrix: rational_matrix(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            rotations: vec![],
        };
        assert!(matches!(
            enumerate_finite(3, &[GroupGenerator::rotation(3, tag), bad], 10),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn float_images_agree() {
        let tag = RotationTag::new(6, (0, 1)).unwrap();
        let g = enumerate_finite(2, &[GroupGenerator::rotation(2, tag)], DEFAULT_GROUP_CAP).unwrap();
        for m in g.to_f64(0.0).unwrap() {
            // orthogonal
            for i in 0..2 {
                for j in 0..2 {
                    let dot: f64 = (0..2).map(|k| m[k][i] * m[k][j]).sum();
                    assert!((dot - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
                }
            }
        }
        assert_eq!(turn_order(&crate::exactnum::rat(5, 6)), 6);
        assert_eq!(matrix_order(&kappa_x(), 10).unwrap(), 2);
    }
}
