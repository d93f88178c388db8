use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::frame::Frame;
use crate::error::{Error, Result};
use crate::exactnum::{BoostScalar, Rational, UniPoly};
use crate::lorentz::FiniteGroup;
use crate::matrix::Matrix;
use crate::polyring::{Monomial, Poly};

fn group_mean(order: usize) -> Rational {
    Rational::one() / Rational::from_integer(order.into())
}

fn require_product(g: &FiniteGroup) -> Result<()> {
    if g.has_rotations() && !g.is_direct_product() {
        return Err(Error::Unsupported(
            "structural rotations tied to matrix generators in a non-product group".into(),
        ));
    }
    Ok(())
}

/// Average over the rotation torus part: keep the complex-pair monomials
/// whose character is trivial on every rotation part.
fn torus_average(p: &Poly<BoostScalar>, g: &FiniteGroup) -> Result<Poly<BoostScalar>> {
    let frame = Frame {
        planes: g.planes().to_vec(),
        cone: None,
    };
    let turns = g.turn_parts();
    let q = frame.to_frame(p)?;
    let mut kept = Poly::zero(q.nvars());
    for (m, c) in q.terms() {
        if turns.iter().all(|t| frame.phase(&m.0, t).is_integer()) {
            kept = &kept + &Poly::monomial(m.0.clone(), c.clone());
        }
    }
    frame.real_from_frame(&kept)
}

/// `(1/|G|) Σ_g p ∘ g`.
pub fn reynolds(p: &Poly<BoostScalar>, g: &FiniteGroup) -> Result<Poly<BoostScalar>> {
    if p.nvars() != g.dim() {
        return Err(Error::Shape(format!(
            "polynomial in {} variables, group acts on R^{}",
            p.nvars(),
            g.dim()
        )));
    }
    require_product(g)?;
    let parts = g.matrix_parts();
    let mut acc = Poly::zero(p.nvars());
    for m in &parts {
        acc = &acc + &p.substitute_linear(m)?;
    }
    let avg = acc.scale(&BoostScalar::from_rational(group_mean(parts.len())));
    if g.has_rotations() {
        torus_average(&avg, g)
    } else {
        Ok(avg)
    }
}

/// `Φ(z) = num/den` with `den(0) = 1`, and its first coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct MolienSeries {
    pub num: UniPoly,
    pub den: UniPoly,
    pub coeffs: Vec<u64>,
}

impl MolienSeries {
    pub fn to_json(&self) -> Value {
        json!({
            "num": uni_to_json(&self.num),
            "den": uni_to_json(&self.den),
            "coeffs": self.coeffs,
        })
    }
}

fn uni_to_json(p: &UniPoly) -> Value {
    let terms: Vec<(Vec<u32>, Rational)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (vec![k as u32], c.clone()))
        .collect();
    let poly = Poly::from_terms(1, terms).expect("one variable");
    serde_json::to_value(crate::polyring::lift_rational(&poly)).expect("polynomials serialize")
}

/// `a/b + c/d` reduced.
fn add_fractions(a: (UniPoly, UniPoly), c: (UniPoly, UniPoly)) -> (UniPoly, UniPoly) {
    let num = a.0 * c.1.clone() + c.0 * a.1.clone();
    let den = a.1 * c.1;
    reduce(num, den)
}

fn reduce(num: UniPoly, den: UniPoly) -> (UniPoly, UniPoly) {
    let g = UniPoly::gcd(&num, &den);
    let (n, _) = num.div_rem(&g);
    let (d, _) = den.div_rem(&g);
    let c0 = d.coeff(0);
    if c0.is_zero() {
        return (n, d);
    }
    let inv = c0.recip();
    (n.scale(&inv), d.scale(&inv))
}

fn one_minus_z_pow(n: usize) -> UniPoly {
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    c[n] = -Rational::one();
    UniPoly::new(c)
}

/// Molien function of the matrix parts restricted to `axes`.
fn matrix_molien(parts: &[Matrix<BoostScalar>], axes: &[usize]) -> Result<(UniPoly, UniPoly)> {
    let mut acc = (UniPoly::zero(), UniPoly::one());
    for m in parts {
        let mut r = Matrix::zeros(axes.len(), axes.len());
        for (a, &i) in axes.iter().enumerate() {
            for (b, &j) in axes.iter().enumerate() {
                r.set(a, b, m.get(i, j).clone());
            }
        }
        let coeffs = r
            .det_one_minus_z()?
            .iter()
            .map(BoostScalar::as_rational)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Certificate("characteristic polynomial is not rational".into()))?;
        acc = add_fractions(acc, (UniPoly::one(), UniPoly::new(coeffs)));
    }
    let mean = group_mean(parts.len());
    Ok(reduce(acc.0.scale(&mean), acc.1))
}

/// Molien function of the rotation torus on its complex pairs, by counting
/// trivial-character monomials against the denominator `Π (1 - z^N_p)^2`.
fn torus_molien(g: &FiniteGroup) -> (UniPoly, UniPoly) {
    let turns = g.turn_parts();
    let planes = g.planes();
    let mut den = UniPoly::one();
    for p in 0..planes.len() {
        let n = turns
            .iter()
            .map(|t| crate::lorentz::turn_order(&t[p]))
            .fold(1, num_integer::lcm);
        den = den * one_minus_z_pow(n).pow(2);
    }
    let deg = den.degree().unwrap_or(0);
    // frame layout on 2P compact slots: plane p uses slots (2p, 2p+1)
    let frame = Frame {
        planes: (0..planes.len()).map(|p| (2 * p, 2 * p + 1)).collect(),
        cone: None,
    };
    let series: Vec<Rational> = (0..=deg as u32)
        .map(|d| {
            let count = Monomial::all_of_degree(2 * planes.len(), d)
                .iter()
                .filter(|m| turns.iter().all(|t| frame.phase(&m.0, t).is_integer()))
                .count();
            Rational::from_integer(count.into())
        })
        .collect();
    let num = (UniPoly::new(series) * den.clone()).truncate(deg + 1);
    reduce(num, den)
}

/// `Φ(z) = (1/|G|) Σ_g 1/det(I - z g)`, expanded to `order` terms.
pub fn molien(g: &FiniteGroup, order: usize) -> Result<MolienSeries> {
    require_product(g)?;
    let free = g.free_axes();
    let (mut num, mut den) = matrix_molien(&g.matrix_parts(), &free)?;
    if g.has_rotations() {
        let (tn, td) = torus_molien(g);
        (num, den) = reduce(num * tn, den * td);
    }
    let inv = den
        .series_inverse(order)
        .ok_or_else(|| Error::Certificate("Molien denominator vanishes at 0".into()))?;
    let expansion = (UniPoly::new(inv) * num.clone()).truncate(order);
    let coeffs = (0..order)
        .map(|k| {
            let c = expansion.coeff(k);
            if c.is_integer() && c >= Rational::zero() {
                Ok(c.to_integer().to_string().parse::<u64>().expect("fits"))
            } else {
                Err(Error::Certificate(format!("Molien coefficient {c} is not a count")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MolienSeries { num, den, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::lorentz::{enumerate_finite, kappa_x, GroupGenerator, RotationTag, DEFAULT_GROUP_CAP};

    fn rot(order: u32) -> FiniteGroup {
        let tag = RotationTag::new(order, (0, 1)).unwrap();
        enumerate_finite(2, &[GroupGenerator::rotation(2, tag)], DEFAULT_GROUP_CAP).unwrap()
    }

    fn mat(m: Matrix<BoostScalar>) -> FiniteGroup {
        enumerate_finite(m.nrows(), &[GroupGenerator::matrix(m)], DEFAULT_GROUP_CAP).unwrap()
    }

    fn v(i: usize) -> Poly<BoostScalar> {
        Poly::var(2, i)
    }

    #[test]
    fn reflection_average() {
        let g = mat(kappa_x());
        assert!(reynolds(&v(1), &g).unwrap().is_zero());
        assert_eq!(reynolds(&v(0).pow(2), &g).unwrap(), v(0).pow(2));
    }

    #[test]
    fn order_three_cubic() {
        // average of x^3 over rotations by 0, 2π/3, 4π/3, computed by hand:
        // the mean of (x cos θ - y sin θ)^3 over the three angles is (x^3 - 3 x y^2)/4
        let r = reynolds(&v(0).pow(3), &rot(3)).unwrap();
        let expect = (&v(0).pow(3) - &(&v(0) * &v(1).pow(2)).scale(&BoostScalar::from_int(3)))
            .scale(&BoostScalar::from_rational(rat(1, 4)));
        assert_eq!(r, expect);
        assert_eq!(reynolds(&r, &rot(3)).unwrap(), r);
    }

    #[test]
    fn molien_series() {
        let minus = mat(Matrix::<BoostScalar>::identity(2).neg());
        assert_eq!(molien(&minus, 5).unwrap().coeffs, vec![1, 0, 3, 0, 5]);
        assert_eq!(molien(&rot(3), 7).unwrap().coeffs, vec![1, 0, 1, 2, 1, 2, 3]);
        let trivial = mat(Matrix::identity(3));
        let m = molien(&trivial, 4).unwrap();
        assert_eq!(m.coeffs, vec![1, 3, 6, 10]);
        assert_eq!(m.den, UniPoly::new(vec![int(1), int(-3), int(3), int(-1)]));
        assert_eq!(m.num, UniPoly::one());
    }

    #[test]
    fn rotations_agree_with_matrices() {
        // the quarter turn also has a rational matrix
        let q = Matrix::from_rows(vec![
            vec![BoostScalar::from_int(0), BoostScalar::from_int(-1)],
            vec![BoostScalar::from_int(1), BoostScalar::from_int(0)],
        ])
        .unwrap();
        let a = molien(&mat(q.clone()), 9).unwrap();
        let b = molien(&rot(4), 9).unwrap();
        assert_eq!(a, b);
        let p = &v(0).pow(3) * &v(1);
        assert_eq!(reynolds(&p, &mat(q)).unwrap(), reynolds(&p, &rot(4)).unwrap());
    }
}
