//! Small dense matrices over an exact coefficient ring.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{int, Coeff, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![C::one(); n])
    }

    pub fn diagonal(d: &[C]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.set(j, i, v.clone());
        }
        t
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Matrix<D>> {
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Option<Vec<_>>>()?,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("cannot subtract matrices of different shapes".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn mul_vec(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length does not match matrix".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(C::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        let mut out = Self::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for (i, j, v) in self.entries() {
            out.set(i, j, v.clone());
        }
        for (i, j, v) in other.entries() {
            out.set(self.rows + i, self.cols + j, v.clone());
        }
        out
    }

    /// Division-free determinant by cofactor expansion with memoisation over
    /// column subsets. Intended for the small dimensions used here.
    pub fn det(&self) -> Result<C> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(C::one());
        }
        if n > 20 {
            return Err(Error::Unsupported("determinant dimension above 20".into()));
        }
        // minors[mask] = det of rows (n - popcount(mask)).. with columns in mask
        let mut memo: HashMap<u32, C> = HashMap::new();
        memo.insert(0, C::one());
        fn go<C: Coeff>(m: &Matrix<C>, mask: u32, memo: &mut HashMap<u32, C>) -> C {
            if let Some(v) = memo.get(&mask) {
                return v.clone();
            }
            let n = m.rows;
            let row = n - mask.count_ones() as usize;
            let mut acc = C::zero();
            let mut sign_neg = false;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let a = m.get(row, col);
                if !a.is_zero() {
                    let minor = go(m, mask & !(1 << col), memo);
                    let term = a.clone() * minor;
                    acc = if sign_neg { acc - term } else { acc + term };
                }
                sign_neg = !sign_neg;
            }
            memo.insert(mask, acc.clone());
            acc
        }
        Ok(go(self, (1u32 << n) - 1, &mut memo))
    }

    /// Coefficients `[c_0, .., c_n]` of `det(I - z*self)` via the
    /// Faddeev-LeVerrier recurrence.
    pub fn det_one_minus_z(&self) -> Result<Vec<C>> {
        if !self.is_square() {
            return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        // char poly det(lambda I - A) = sum_k a_k lambda^(n-k), a_0 = 1;
        // det(I - zA) = sum_k a_k z^k.
        let mut coeffs = vec![C::one()];
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + a_{k-1} I
            let mut next = self.mul(&m)?;
            for i in 0..n {
                let v = next.get(i, i).clone() + coeffs[k - 1].clone();
                next.set(i, i, v);
            }
            m = next;
            let am = self.mul(&m)?;
            let trace = (0..n).fold(C::zero(), |acc, i| acc + am.get(i, i).clone());
            let a_k = -(trace * C::from_rational(&(Rational::one() / int(k as i64))));
            coeffs.push(a_k);
        }
        Ok(coeffs)
    }
}

impl<C: fmt::Debug> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, BoostScalar};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn det_small() {
        assert_eq!(q(&[&[1, 2], &[3, 4]]).det().unwrap(), int(-2));
        assert_eq!(q(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).det().unwrap(), int(6));
        assert_eq!(Matrix::<Rational>::identity(0).det().unwrap(), int(1));
    }

    #[test]
    fn boost_det_is_one() {
        let c = BoostScalar::cosh_beta();
        let s = BoostScalar::sinh_beta();
        let h = Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![s, c]]).unwrap();
        assert_eq!(h.det().unwrap(), BoostScalar::one());
    }

    #[test]
    fn det_one_minus_z_rotation() {
        // quarter turn: det(I - zR) = 1 + z^2
        let r = q(&[&[0, -1], &[1, 0]]);
        assert_eq!(r.det_one_minus_z().unwrap(), vec![int(1), int(0), int(1)]);
        let d = Matrix::diagonal(&[rat(1, 2), int(3), int(-1)]);
        // (1 - z/2)(1 - 3z)(1 + z) = 1 - 5/2 z - 2 z^2 + 3/2 z^3
        assert_eq!(
            d.det_one_minus_z().unwrap(),
            vec![int(1), rat(-5, 2), int(-2), rat(3, 2)]
        );
    }

    #[test]
    fn shape_errors() {
        let a = q(&[&[1, 2, 3]]);
        assert!(matches!(a.mul(&a), Err(Error::Shape(_))));
        assert!(a.det().is_err());
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![]]).is_err());
    }
}
