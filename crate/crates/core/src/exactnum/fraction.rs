use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::boost::BoostScalar;
use super::coeff::{Coeff, Field};
use super::rational::Rational;
use super::univariate::UniPoly;

/// Element of the fraction field `Q(s)` of [`BoostScalar`].
///
/// Canonical form: the denominator is a monic polynomial in `s` with a
/// nonzero constant term, coprime to the numerator, so structural equality is
/// field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoostFraction {
    num: BoostScalar,
    den: BoostScalar,
}

fn split_laurent(a: &BoostScalar) -> (i64, UniPoly) {
    let lo = a.min_power().unwrap_or(0);
    let hi = a.max_power().unwrap_or(0);
    let coeffs = (lo..=hi).map(|k| a.coefficient(k)).collect();
    (lo, UniPoly::new(coeffs))
}

fn join_laurent(shift: i64, p: &UniPoly) -> BoostScalar {
    BoostScalar::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (shift + k as i64, c.clone())),
    )
}

impl BoostFraction {
    /// `num / den`; `None` when `den` is zero.
    pub fn new(num: BoostScalar, den: BoostScalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (kn, pn) = split_laurent(&num);
        let (kd, pd) = split_laurent(&den);
        let g = UniPoly::gcd(&pn, &pd);
        let (pn, _) = pn.div_rem(&g);
        let (pd, _) = pd.div_rem(&g);
        let lead = pd.leading().cloned().unwrap_or_else(Rational::one).recip();
        Some(Self {
            num: join_laurent(kn - kd, &pn.scale(&lead)),
            den: join_laurent(0, &pd.scale(&lead)),
        })
    }

    pub fn numerator(&self) -> &BoostScalar {
        &self.num
    }

    pub fn denominator(&self) -> &BoostScalar {
        &self.den
    }

    /// The Laurent polynomial this fraction equals, if any.
    pub fn as_laurent(&self) -> Option<BoostScalar> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }
}

impl From<BoostScalar> for BoostFraction {
    fn from(a: BoostScalar) -> Self {
        Self::new(a, BoostScalar::one()).expect("nonzero denominator")
    }
}

impl fmt::Display for BoostFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for BoostFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoostFraction({self})")
    }
}

impl Add for BoostFraction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for BoostFraction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for BoostFraction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for BoostFraction {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("division by zero")
    }
}

impl Neg for BoostFraction {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Zero for BoostFraction {
    fn zero() -> Self {
        Self {
            num: BoostScalar::zero(),
            den: BoostScalar::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for BoostFraction {
    fn one() -> Self {
        Self::from(BoostScalar::one())
    }
}

impl Coeff for BoostFraction {
    fn from_rational(r: &Rational) -> Self {
        Self::from(BoostScalar::from_rational(r.clone()))
    }

    fn unit_inverse(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl Field for BoostFraction {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    #[test]
    fn canonical_equality() {
        let c = BoostScalar::cosh_beta();
        let s = BoostScalar::s();
        // (s^2 cosh) / (s^2) == cosh
        let a = BoostFraction::new(&c * &BoostScalar::t(), BoostScalar::t()).unwrap();
        assert_eq!(a.as_laurent(), Some(c.clone()));
        // (1 + s) / (2 + 2s) == 1/2
        let one_plus_s = &BoostScalar::one() + &s;
        let b = BoostFraction::new(one_plus_s.clone(), one_plus_s.scale(&int(2))).unwrap();
        assert_eq!(b, BoostFraction::from_rational(&crate::exactnum::rat(1, 2)));
    }

    #[test]
    fn field_inverse() {
        let c = BoostFraction::from(BoostScalar::cosh_beta());
        let inv = c.inv().unwrap();
        assert_eq!(c * inv, BoostFraction::one());
        assert!(BoostFraction::zero().inv().is_none());
    }
}
