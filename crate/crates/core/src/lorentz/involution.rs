use num_traits::Signed;
use serde::Serialize;

use super::element::{kappa_x, kappa_y, validate, LorentzMatrix};
use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, BoostScalar, Rational};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reflection {
    #[serde(rename = "kappa_x")]
    KappaX,
    #[serde(rename = "kappa_y")]
    KappaY,
}

impl Reflection {
    pub fn matrix(&self) -> Matrix<BoostScalar> {
        match self {
            Reflection::KappaX => kappa_x(),
            Reflection::KappaY => kappa_y(),
        }
    }
}

/// `conjugator⁻¹ · A · conjugator = kind.matrix()`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub kind: Reflection,
    pub conjugator: LorentzMatrix,
    /// `e^β` of the involution family, as `c * s^k`.
    pub exp_beta: (Rational, i64),
}

/// Square root of a unit `c * s^k` with `c > 0`, if it is again a unit with
/// rational coefficient.
fn unit_sqrt(c: &Rational, k: i64) -> Option<BoostScalar> {
    if k % 2 != 0 || !c.is_positive() {
        return None;
    }
    Some(BoostScalar::monomial(rational_sqrt(c)?, k / 2))
}

/// Reduce an involution of `O(1,1)` other than `±I` to `κ_x` or `κ_y`.
pub fn involution_normal_form(a: &LorentzMatrix) -> Result<NormalForm> {
    if a.n() != 1 || a.is_tagged() {
        return Err(Error::Shape("involution normal form needs signature (1,1)".into()));
    }
    let m = a.entries();
    let sq = m.mul(m)?;
    if !sq.is_identity() {
        return Err(Error::NotInvolutive);
    }
    if m.is_identity() || m.neg().is_identity() {
        return Err(Error::Central);
    }
    // Every non-central involution has the shape [[a, b], [-b, -a]].
    let (p, q) = (m.get(0, 0).clone(), m.get(0, 1).clone());
    if *m.get(1, 0) != -q.clone() || *m.get(1, 1) != -p.clone() {
        return Err(Error::Certificate(format!("unexpected involution shape {m:?}")));
    }
    let sign = a.time_sign().map(|t| -t)?;
    let (kind, exp_beta) = if sign > 0 {
        (Reflection::KappaX, &p + &q)
    } else {
        (Reflection::KappaY, -(&p + &q))
    };
    let (c, k) = exp_beta
        .as_unit()
        .ok_or_else(|| Error::Certificate(format!("a + b = {exp_beta} is not a unit")))?;
    let half = unit_sqrt(&c, k).ok_or_else(|| {
        Error::NotExact(format!("e^(beta/2) for e^beta = {exp_beta} is not a Laurent unit"))
    })?;
    let half_inv = half.inv()?;
    let two = Rational::from_integer(2.into());
    let ch = (&half + &half_inv).scale(&two.recip());
    let sh = (&half - &half_inv).scale(&two.recip());
    let conj = Matrix::from_rows(vec![vec![ch.clone(), -sh.clone()], vec![-sh, ch]])?;
    let conjugator = validate(&conj, 1)?;
    let back = conjugator.inverse()?.entries().mul(m)?.mul(&conj)?;
    if back != kind.matrix() {
        return Err(Error::Certificate("conjugation did not reach the reflection".into()));
    }
    Ok(NormalForm {
        kind,
        conjugator,
        exp_beta: (c, k),
    })
}

/// The involution families `[[cosh mβ, sinh mβ], [-sinh mβ, -cosh mβ]]`
/// (`κ_x` family) and its negative (`κ_y` family).
pub fn involution_family(kind: Reflection, m: i64) -> Matrix<BoostScalar> {
    let c = BoostScalar::cosh_half_multiple(2 * m);
    let s = BoostScalar::sinh_half_multiple(2 * m);
    let f = Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![-s, -c]]).expect("2x2");
    match kind {
        Reflection::KappaX => f,
        Reflection::KappaY => f.neg(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::lorentz::element::hyperbolic_rotation;

    #[test]
    fn families_reach_their_reflections() {
        for m in [1, 2, -3] {
            for kind in [Reflection::KappaX, Reflection::KappaY] {
                let a = validate(&involution_family(kind, m), 1).unwrap();
                let nf = involution_normal_form(&a).unwrap();
                assert_eq!(nf.kind, kind);
                assert_eq!(nf.exp_beta, (rat(1, 1), 2 * m));
                let c = nf.conjugator.entries();
                let back = nf.conjugator.inverse().unwrap().entries().mul(a.entries()).unwrap();
                assert_eq!(back.mul(c).unwrap(), kind.matrix());
            }
        }
    }

    #[test]
    fn conjugator_uses_half_rapidity() {
        let a = validate(&involution_family(Reflection::KappaX, 1), 1).unwrap();
        let nf = involution_normal_form(&a).unwrap();
        let c = nf.conjugator.entries();
        assert_eq!(c.get(0, 0), &BoostScalar::cosh_half_beta());
        assert_eq!(c.get(0, 1), &-BoostScalar::sinh_half_beta());
    }

    #[test]
    fn reflections_themselves() {
        let kx = validate(&kappa_x(), 1).unwrap();
        let nf = involution_normal_form(&kx).unwrap();
        assert_eq!(nf.kind, Reflection::KappaX);
        assert!(nf.conjugator.entries().is_identity());
        let ky = validate(&kappa_y(), 1).unwrap();
        assert_eq!(involution_normal_form(&ky).unwrap().kind, Reflection::KappaY);
    }

    #[test]
    fn rejections() {
        let h = validate(&hyperbolic_rotation(1), 1).unwrap();
        assert_eq!(involution_normal_form(&h), Err(Error::NotInvolutive));
        let i = validate(&Matrix::identity(2), 1).unwrap();
        assert_eq!(involution_normal_form(&i), Err(Error::Central));
        let mi = validate(&Matrix::<BoostScalar>::identity(2).neg(), 1).unwrap();
        assert_eq!(involution_normal_form(&mi), Err(Error::Central));
    }

    #[test]
    fn rational_rapidity_without_exact_half() {
        // e^β = 2: cosh β = 5/4, sinh β = 3/4; e^(β/2) = √2 is not rational.
        let a = Matrix::from_rows(vec![
            vec![BoostScalar::from_rational(rat(5, 4)), BoostScalar::from_rational(rat(3, 4))],
            vec![BoostScalar::from_rational(rat(-3, 4)), BoostScalar::from_rational(rat(-5, 4))],
        ])
        .unwrap();
        let a = validate(&a, 1).unwrap();
        assert!(matches!(involution_normal_form(&a), Err(Error::NotExact(_))));
        // e^β = 4 has the rational half 2.
        let b = Matrix::from_rows(vec![
            vec![BoostScalar::from_rational(rat(17, 8)), BoostScalar::from_rational(rat(15, 8))],
            vec![BoostScalar::from_rational(rat(-15, 8)), BoostScalar::from_rational(rat(-17, 8))],
        ])
        .unwrap();
        let nf = involution_normal_form(&validate(&b, 1).unwrap()).unwrap();
        assert_eq!(nf.kind, Reflection::KappaX);
        assert_eq!(nf.exp_beta, (rat(4, 1), 0));
    }
}
