use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, BoostScalar, Rational};
use crate::matrix::Matrix;

/// Time-orientation sign checks are confirmed numerically at these rapidities.
pub const SIGN_PROBE_BETAS: [f64; 3] = [-1.0, 0.5, 2.0];

/// The quadratic form `x_1^2 + .. + x_n^2 - y^2` on `R^{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinkowskiForm {
    pub n: usize,
}

impl MinkowskiForm {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// `diag(1, .., 1, -1)`.
    pub fn matrix(&self) -> Matrix<BoostScalar> {
        let mut d = vec![BoostScalar::one(); self.n + 1];
        d[self.n] = BoostScalar::from_int(-1);
        Matrix::diagonal(&d)
    }

    /// `Λ_p = diag(I_{n-1,1}, 1)`, with the `-1` in the first spatial slot.
    pub fn lambda_p(&self) -> Matrix<BoostScalar> {
        let mut d = vec![BoostScalar::one(); self.n + 1];
        d[0] = BoostScalar::from_int(-1);
        Matrix::diagonal(&d)
    }

    /// `Λ_t = J`.
    pub fn lambda_t(&self) -> Matrix<BoostScalar> {
        self.matrix()
    }

    pub fn lambda_pt(&self) -> Matrix<BoostScalar> {
        self.lambda_p()
            .mul(&self.lambda_t())
            .expect("square matrices of equal size")
    }
}

/// `H_{mβ}` on the Minkowski plane.
pub fn hyperbolic_rotation(m: i64) -> Matrix<BoostScalar> {
    let c = BoostScalar::cosh_half_multiple(2 * m);
    let s = BoostScalar::sinh_half_multiple(2 * m);
    Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![s, c]]).expect("2x2")
}

/// `I_{n-1} ⊕ H_{mβ}` acting on `R^{n,1}`.
pub fn boost_in(n: usize, m: i64) -> Matrix<BoostScalar> {
    Matrix::<BoostScalar>::identity(n - 1).direct_sum(&hyperbolic_rotation(m))
}

pub fn kappa_x() -> Matrix<BoostScalar> {
    Matrix::diagonal(&[BoostScalar::one(), BoostScalar::from_int(-1)])
}

pub fn kappa_y() -> Matrix<BoostScalar> {
    Matrix::diagonal(&[BoostScalar::from_int(-1), BoostScalar::one()])
}

/// A rotation of finite order carried structurally: the turn `1/order` in
/// the oriented coordinate plane `(i, j)`, i.e. `x_i ↦ cos θ x_i - sin θ x_j`,
/// `x_j ↦ sin θ x_i + cos θ x_j` with `θ = 2π/order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RotationTag {
    pub order: u32,
    pub plane: (usize, usize),
}

impl RotationTag {
    pub fn new(order: u32, plane: (usize, usize)) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse("rotation order must be positive".into()));
        }
        if plane.0 == plane.1 {
            return Err(Error::Parse("rotation plane needs two distinct axes".into()));
        }
        Ok(Self { order, plane })
    }

    pub fn turn(&self) -> Rational {
        rat(1, self.order as i64)
    }

    /// Floating matrix of the rotation on `R^dim`, for numeric cross-checks.
    pub fn to_f64(&self, dim: usize) -> Vec<Vec<f64>> {
        turns_to_f64(dim, &[(self.plane, self.turn())])
    }
}

/// Floating matrix of a product of plane rotations given as turns.
pub fn turns_to_f64(dim: usize, turns: &[((usize, usize), Rational)]) -> Vec<Vec<f64>> {
    let mut m: Vec<Vec<f64>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for ((i, j), t) in turns {
        let theta = 2.0 * std::f64::consts::PI * crate::exactnum::rational_to_f64(t);
        let (s, c) = theta.sin_cos();
        m[*i][*i] = c;
        m[*i][*j] = -s;
        m[*j][*i] = s;
        m[*j][*j] = c;
    }
    m
}

/// The four cosets of the identity component in `O(n,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Component {
    #[serde(rename = "SO0")]
    Identity,
    #[serde(rename = "Lambda_p SO0")]
    SpaceReversal,
    #[serde(rename = "Lambda_t SO0")]
    TimeReversal,
    #[serde(rename = "Lambda_pt SO0")]
    TotalReversal,
}

impl Component {
    /// From `(det, time-time sign)`.
    pub fn from_signs(det: i32, time: i32) -> Self {
        match (det > 0, time > 0) {
            (true, true) => Component::Identity,
            (false, true) => Component::SpaceReversal,
            (false, false) => Component::TimeReversal,
            (true, false) => Component::TotalReversal,
        }
    }

    pub fn signs(&self) -> (i32, i32) {
        match self {
            Component::Identity => (1, 1),
            Component::SpaceReversal => (-1, 1),
            Component::TimeReversal => (-1, -1),
            Component::TotalReversal => (1, -1),
        }
    }

    /// Coset product; the cosets form a Klein four-group.
    pub fn compose(&self, other: &Self) -> Self {
        let (d1, t1) = self.signs();
        let (d2, t2) = other.signs();
        Self::from_signs(d1 * d2, t1 * t2)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Component::Identity => "SO0",
            Component::SpaceReversal => "Lambda_p SO0",
            Component::TimeReversal => "Lambda_t SO0",
            Component::TotalReversal => "Lambda_pt SO0",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated element of `O(n,1)`, optionally carrying structural rotations
/// on spatial planes. The element is `R_tags · entries`, where `entries` is
/// the identity on every tagged plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LorentzMatrix {
    entries: Matrix<BoostScalar>,
    n: usize,
    rotations: Vec<RotationTag>,
    det: BoostScalar,
}

impl LorentzMatrix {
    pub fn entries(&self) -> &Matrix<BoostScalar> {
        &self.entries
    }

    /// Spatial dimension `n` of the signature `(n,1)`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn rotations(&self) -> &[RotationTag] {
        &self.rotations
    }

    pub fn det(&self) -> &BoostScalar {
        &self.det
    }

    pub fn det_sign(&self) -> i32 {
        if self.det.is_one() {
            1
        } else {
            -1
        }
    }

    /// The time-time entry, whose sign is the time orientation.
    pub fn time_entry(&self) -> &BoostScalar {
        self.entries.get(self.n, self.n)
    }

    /// Sign of the time-time entry, read from its dominant coefficients and
    /// confirmed numerically at [`SIGN_PROBE_BETAS`].
    pub fn time_sign(&self) -> Result<i32> {
        let tt = self.time_entry();
        let sign = tt
            .dominant_sign()
            .ok_or_else(|| Error::Certificate(format!("time-time entry {tt} has no definite sign")))?;
        for beta in SIGN_PROBE_BETAS {
            let v = tt.eval_numeric(beta)?;
            if v.signum() as i32 != sign || v.abs() < 1.0 - 1e-12 {
                return Err(Error::Certificate(format!(
                    "time-time entry {tt} evaluates to {v} at beta = {beta}"
                )));
            }
        }
        Ok(sign)
    }

    pub fn component(&self) -> Result<Component> {
        Ok(Component::from_signs(self.det_sign(), self.time_sign()?))
    }

    pub fn is_tagged(&self) -> bool {
        !self.rotations.is_empty()
    }

    /// Product of two untagged elements.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_tagged() || other.is_tagged() {
            return Err(Error::Unsupported(
                "products of structurally tagged rotations are formed inside group closures".into(),
            ));
        }
        if self.n != other.n {
            return Err(Error::Shape("elements of different O(n,1)".into()));
        }
        validate(&self.entries.mul(&other.entries)?, self.n)
    }

    /// Inverse `J A^T J` of an untagged element.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_tagged() {
            return Err(Error::Unsupported("inverse of a tagged element".into()));
        }
        let j = MinkowskiForm::new(self.n).matrix();
        validate(&j.mul(&self.entries.transpose())?.mul(&j)?, self.n)
    }
}

/// Check `A^T J A = J` exactly and return the validated element.
pub fn validate(a: &Matrix<BoostScalar>, n: usize) -> Result<LorentzMatrix> {
    validate_tagged(a, n, &[])
}

/// As [`validate`], with structural rotations on spatial planes.
pub fn validate_tagged(
    a: &Matrix<BoostScalar>,
    n: usize,
    rotations: &[RotationTag],
) -> Result<LorentzMatrix> {
    if !a.is_square() || a.nrows() != n + 1 {
        return Err(Error::Shape(format!(
            "expected a {}x{} matrix for signature ({n},1), got {}x{}",
            n + 1,
            n + 1,
            a.nrows(),
            a.ncols()
        )));
    }
    let j = MinkowskiForm::new(n).matrix();
    let residual = a.transpose().mul(&j)?.mul(a)?.sub(&j)?;
    if let Some((row, col, v)) = residual.entries().find(|(_, _, v)| !v.is_zero()) {
        return Err(Error::NotLorentz {
            row,
            col,
            residual: v.to_string(),
        });
    }
    let mut used = vec![false; n + 1];
    for tag in rotations {
        let (i, j) = tag.plane;
        if i >= n || j >= n {
            return Err(Error::Shape(format!(
                "rotation plane ({i},{j}) is not spatial in signature ({n},1)"
            )));
        }
        if used[i] || used[j] {
            return Err(Error::Unsupported("overlapping rotation planes".into()));
        }
        used[i] = true;
        used[j] = true;
    }
    check_identity_on(a, &used)?;
    let det = a.det()?;
    if det != BoostScalar::one() && det != BoostScalar::from_int(-1) {
        return Err(Error::Certificate(format!("determinant {det} is not ±1")));
    }
    Ok(LorentzMatrix {
        entries: a.clone(),
        n,
        rotations: rotations.to_vec(),
        det,
    })
}

/// Rows and columns flagged in `mask` must be those of the identity.
pub(crate) fn check_identity_on<C: crate::exactnum::Coeff>(a: &Matrix<C>, mask: &[bool]) -> Result<()> {
    for (i, &m) in mask.iter().enumerate() {
        if !m {
            continue;
        }
        for k in 0..a.nrows() {
            let want = if k == i { C::one() } else { C::zero() };
            if *a.get(i, k) != want || *a.get(k, i) != want {
                return Err(Error::Unsupported(format!(
                    "matrix part must be the identity on rotated axis {i}"
                )));
            }
        }
    }
    Ok(())
}

/// Convenience constructor for rational entries.
pub fn rational_matrix(rows: &[&[i64]]) -> Matrix<BoostScalar> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| BoostScalar::from_int(v)).collect())
            .collect(),
    )
    .expect("rectangular rows")
}
