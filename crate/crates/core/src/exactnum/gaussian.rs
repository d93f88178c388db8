use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::rational::Rational;

/// `re + i*im` over a real coefficient ring. Used for the complex-pair
/// coordinates `z = x + i y` of a rotation plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian<C> {
    pub re: C,
    pub im: C,
}

impl<C: Coeff> Gaussian<C> {
    pub fn new(re: C, im: C) -> Self {
        Self { re, im }
    }

    pub fn real(re: C) -> Self {
        Self { re, im: C::zero() }
    }

    pub fn i() -> Self {
        Self {
            re: C::zero(),
            im: C::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }
}

impl<C: Coeff> Add for Gaussian<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<C: Coeff> Sub for Gaussian<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<C: Coeff> Mul for Gaussian<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Self::new(re, im)
    }
}

impl<C: Coeff> Neg for Gaussian<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<C: Coeff> Zero for Gaussian<C> {
    fn zero() -> Self {
        Self::new(C::zero(), C::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<C: Coeff> One for Gaussian<C> {
    fn one() -> Self {
        Self::real(C::one())
    }
}

impl<C: Coeff> Coeff for Gaussian<C> {
    fn from_rational(r: &Rational) -> Self {
        Self::real(C::from_rational(r))
    }

    fn unit_inverse(&self) -> Option<Self> {
        let norm = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let ninv = norm.unit_inverse()?;
        Some(Self::new(self.re.clone() * ninv.clone(), -self.im.clone() * ninv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    #[test]
    fn i_squared() {
        let i = Gaussian::<Rational>::i();
        assert_eq!(i.clone() * i, -Gaussian::one());
        assert_eq!(Gaussian::<Rational>::i_pow(-1), -Gaussian::i());
        let a = Gaussian::new(int(3), int(4));
        assert_eq!(a.clone() * a.unit_inverse().unwrap(), Gaussian::one());
    }
}
