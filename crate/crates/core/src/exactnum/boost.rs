use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::coeff::{Coeff, Scalar};
use super::fraction::BoostFraction;
use super::rational::{format_rational, int, parse_rational, rat, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// Laurent polynomial with rational coefficients in the formal unit
/// `s = e^(beta/2)`.
///
/// `cosh(beta) = (s^2 + s^-2)/2`, `sinh(beta) = (s^2 - s^-2)/2`, and the
/// half-rapidity functions are linear in `s^{±1}`, so every boost matrix
/// generated from one fixed rapidity has entries in this ring.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BoostScalar {
    terms: BTreeMap<i64, Rational>,
}

impl BoostScalar {
    pub fn from_rational(r: Rational) -> Self {
        Self::monomial(r, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `c * s^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Self::default();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    /// The unit `s`.
    pub fn s() -> Self {
        Self::monomial(int(1), 1)
    }

    /// `e^beta = s^2`.
    pub fn t() -> Self {
        Self::monomial(int(1), 2)
    }

    /// `cosh(m*beta/2)`.
    pub fn cosh_half_multiple(m: i64) -> Self {
        Self::from_terms([(m, rat(1, 2)), (-m, rat(1, 2))])
    }

    /// `sinh(m*beta/2)`.
    pub fn sinh_half_multiple(m: i64) -> Self {
        Self::from_terms([(m, rat(1, 2)), (-m, rat(-1, 2))])
    }

    pub fn cosh_beta() -> Self {
        Self::cosh_half_multiple(2)
    }

    pub fn sinh_beta() -> Self {
        Self::sinh_half_multiple(2)
    }

    pub fn cosh_half_beta() -> Self {
        Self::cosh_half_multiple(1)
    }

    pub fn sinh_half_beta() -> Self {
        Self::sinh_half_multiple(1)
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The rational value when only the power-0 term is present.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// `(c, k)` when `self = c * s^k` with `c != 0`.
    pub fn as_unit(&self) -> Option<(Rational, i64)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next()?;
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self.as_unit() {
            Some((c, k)) => Ok(Self::monomial(c.recip(), -k)),
            None => Err(Error::NotAUnit(self.to_string())),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(p, c)| (p + k, c.clone())).collect(),
        }
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitute `s = e^(beta/2)`.
    pub fn eval_numeric(&self, beta: f64) -> Result<f64> {
        if !beta.is_finite() {
            return Err(Error::EvaluationOverflow { beta });
        }
        let mut acc = 0.0;
        for (k, c) in &self.terms {
            let term = rational_to_f64(c) * (*k as f64 * beta / 2.0).exp();
            acc += term;
        }
        if acc.is_finite() {
            Ok(acc)
        } else {
            Err(Error::EvaluationOverflow { beta })
        }
    }

    /// Sign of the coefficient at the largest `|power|`; `None` for zero or
    /// when the two extreme powers `±k` carry opposite signs.
    pub fn dominant_sign(&self) -> Option<i32> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        let top = lo.abs().max(hi.abs());
        let signs: Vec<i32> = [top, -top]
            .iter()
            .filter_map(|k| self.terms.get(k))
            .map(|c| if c.is_positive() { 1 } else { -1 })
            .collect();
        match signs.as_slice() {
            [a] => Some(*a),
            [a, b] if a == b => Some(*a),
            _ => None,
        }
    }
}

impl fmt::Display for BoostScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ if mag.is_one() => write!(f, "s^{k}")?,
                _ => write!(f, "{}*s^{k}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BoostScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoostScalar({self})")
    }
}

impl From<Rational> for BoostScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for BoostScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a BoostScalar> for &'a BoostScalar {
    type Output = BoostScalar;

    fn add(self, rhs: &BoostScalar) -> BoostScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BoostScalar> for &'a BoostScalar {
    type Output = BoostScalar;

    fn sub(self, rhs: &BoostScalar) -> BoostScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BoostScalar> for &'a BoostScalar {
    type Output = BoostScalar;

    fn mul(self, rhs: &BoostScalar) -> BoostScalar {
        let mut out = BoostScalar::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &BoostScalar {
    type Output = BoostScalar;

    fn neg(self) -> BoostScalar {
        BoostScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp for BoostScalar {
            type Output = BoostScalar;
            fn $method(self, rhs: BoostScalar) -> BoostScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a BoostScalar> for BoostScalar {
            type Output = BoostScalar;
            fn $method(self, rhs: &BoostScalar) -> BoostScalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BoostScalar {
    type Output = BoostScalar;

    fn neg(self) -> BoostScalar {
        -&self
    }
}

impl Zero for BoostScalar {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BoostScalar {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Coeff for BoostScalar {
    fn from_rational(r: &Rational) -> Self {
        BoostScalar::from_rational(r.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Scalar for BoostScalar {
    type Frac = BoostFraction;

    fn to_frac(&self) -> BoostFraction {
        BoostFraction::from(self.clone())
    }

    fn from_frac(f: &BoostFraction) -> Option<Self> {
        f.as_laurent()
    }
}

impl Serialize for BoostScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(r) = self.as_rational() {
            return serializer.serialize_str(&format_rational(&r));
        }
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BoostScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = BoostScalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\", an integer, or an object {\"<power>\": \"p/q\"}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BoostScalar, E> {
                parse_rational(v)
                    .map(BoostScalar::from_rational)
                    .map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<BoostScalar, E> {
                Ok(BoostScalar::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<BoostScalar, E> {
                i64::try_from(v)
                    .map(BoostScalar::from_int)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_map<A: de::MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<BoostScalar, A::Error> {
                let mut out = BoostScalar::default();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    let power: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("invalid power key {k:?}")))?;
                    let c = parse_rational(&v).map_err(de::Error::custom)?;
                    out.add_term(power, c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}
