use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// Commutative ring with unit usable as a polynomial or matrix coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Canonical image of a rational number.
    fn from_rational(r: &Rational) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
}

/// A [`Coeff`] in which every nonzero element is a unit.
pub trait Field: Coeff {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            self.unit_inverse()
        }
    }
}

/// An integral domain together with an embedding into its fraction field.
pub trait Scalar: Coeff {
    type Frac: Field;

    fn to_frac(&self) -> Self::Frac;

    /// Pull a fraction-field element back into the ring when it lies there.
    fn from_frac(f: &Self::Frac) -> Option<Self>;
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Rational {}

impl Scalar for Rational {
    type Frac = Rational;

    fn to_frac(&self) -> Rational {
        self.clone()
    }

    fn from_frac(f: &Rational) -> Option<Self> {
        Some(f.clone())
    }
}

impl Coeff for f64 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl Field for f64 {}
