//! Diagonalising coordinates: complex pairs `z = x_i + i x_j`, `w = z̄` on
//! rotation planes and light-cone pairs `u = x + y`, `v = x - y` on the
//! Minkowski block. In these coordinates the structural rotations and the
//! boost act by scaling monomials.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat, BoostScalar, Gaussian, Rational};
use crate::lorentz::{GroupGenerator, RotationTag};
use crate::matrix::Matrix;
use crate::polyring::{Monomial, Poly};

pub(crate) type G = Gaussian<BoostScalar>;

#[derive(Clone, Debug, Default)]
pub(crate) struct Frame {
    /// Planes `(i, j)`, `i < j`: `z` sits in slot `i`, `w` in slot `j`.
    pub planes: Vec<(usize, usize)>,
    /// Light-cone pair: `u` in the first slot, `v` in the second.
    pub cone: Option<(usize, usize)>,
}

fn g(c: Rational) -> G {
    G::real(BoostScalar::from_rational(c))
}

fn linear(nvars: usize, terms: &[(usize, G)]) -> Poly<G> {
    let mut p = Poly::zero(nvars);
    for (i, c) in terms {
        p = &p + &Poly::monomial(Monomial::var(nvars, *i).0, c.clone());
    }
    p
}

impl Frame {
    pub fn special(&self, k: usize) -> bool {
        self.planes.iter().any(|&(i, j)| i == k || j == k)
            || self.cone.is_some_and(|(a, b)| a == k || b == k)
    }

    /// Rewrite a real polynomial in frame coordinates.
    pub fn to_frame(&self, p: &Poly<BoostScalar>) -> Result<Poly<G>> {
        let n = p.nvars();
        let half = g(rat(1, 2));
        let mut images: Vec<Poly<G>> = (0..n).map(|k| Poly::var(n, k)).collect();
        for &(i, j) in &self.planes {
            // x_i = (z + w)/2, x_j = (z - w)/(2i)
            let mhalf_i = G::new(BoostScalar::zero(), BoostScalar::from_rational(rat(-1, 2)));
            images[i] = linear(n, &[(i, half.clone()), (j, half.clone())]);
            images[j] = linear(n, &[(i, mhalf_i.clone()), (j, -mhalf_i)]);
        }
        if let Some((a, b)) = self.cone {
            images[a] = linear(n, &[(a, half.clone()), (b, half.clone())]);
            images[b] = linear(n, &[(a, half.clone()), (b, -half.clone())]);
        }
        p.map_coeffs(|c| G::real(c.clone())).compose(&images)
    }

    /// Back to real coordinates; the result must have real coefficients.
    pub fn real_from_frame(&self, q: &Poly<G>) -> Result<Poly<BoostScalar>> {
        let n = q.nvars();
        let one = G::one();
        let mut images: Vec<Poly<G>> = (0..n).map(|k| Poly::var(n, k)).collect();
        for &(i, j) in &self.planes {
            images[i] = linear(n, &[(i, one.clone()), (j, G::i())]);
            images[j] = linear(n, &[(i, one.clone()), (j, -G::i())]);
        }
        if let Some((a, b)) = self.cone {
            images[a] = linear(n, &[(a, one.clone()), (b, one.clone())]);
            images[b] = linear(n, &[(a, one.clone()), (b, -one.clone())]);
        }
        let back = q.compose(&images)?;
        back.try_map_coeffs(|c| c.im.is_zero().then(|| c.re.clone()))
            .ok_or_else(|| Error::Certificate("frame polynomial is not real".into()))
    }

    /// Split into `key ↦ rest`, where `key` holds the exponents of the
    /// special slots and `rest` the remaining variables.
    pub fn split(&self, q: &Poly<G>) -> BTreeMap<Vec<u32>, Poly<G>> {
        let n = q.nvars();
        let mut out: BTreeMap<Vec<u32>, Poly<G>> = BTreeMap::new();
        for (m, c) in q.terms() {
            let key: Vec<u32> = (0..n).map(|k| if self.special(k) { m.0[k] } else { 0 }).collect();
            let rest: Vec<u32> = (0..n).map(|k| if self.special(k) { 0 } else { m.0[k] }).collect();
            let entry = out.entry(key).or_insert_with(|| Poly::zero(n));
            *entry = &*entry + &Poly::monomial(rest, c.clone());
        }
        out
    }

    /// `Σ_p (a_p - b_p) · turn_p` for a key.
    pub fn phase(&self, key: &[u32], turns: &[Rational]) -> Rational {
        self.planes
            .iter()
            .zip(turns)
            .fold(Rational::zero(), |acc, (&(i, j), t)| {
                acc + t * Rational::from_integer((key[i] as i64 - key[j] as i64).into())
            })
    }

    pub fn cone_weight(&self, key: &[u32]) -> i64 {
        self.cone.map_or(0, |(a, b)| key[a] as i64 - key[b] as i64)
    }
}

/// Normalised plane `(min, max)` and the signed turn of a tag on it.
pub(crate) fn oriented(tag: &RotationTag) -> ((usize, usize), Rational) {
    let (i, j) = tag.plane;
    if i < j {
        ((i, j), tag.turn())
    } else {
        ((j, i), -tag.turn())
    }
}

/// `i^k · e^{β r}` with `e^β = c s^k`, or `None` when the phase is not a
/// quarter turn (then it is not in `Q(i)(s)`).
pub(crate) fn eigenvalue(phase: &Rational, exp_beta: &(Rational, i64), weight: i64) -> Result<Option<G>> {
    let quarter = phase * Rational::from_integer(4.into());
    if !quarter.is_integer() {
        return Ok(None);
    }
    let q: i64 = (quarter.to_integer() % num_bigint::BigInt::from(4))
        .to_string()
        .parse()
        .expect("small");
    let unit = BoostScalar::monomial(exp_beta.0.clone(), exp_beta.1).pow(weight)?;
    Ok(Some(G::i_pow(q) * G::real(unit)))
}

/// Frame of one generator: its rotation planes, and its last two
/// coordinates when they form a decoupled hyperbolic rotation.
pub(crate) struct GeneratorFrame {
    pub frame: Frame,
    pub turns: Vec<Rational>,
    pub exp_beta: (Rational, i64),
    /// The matrix with special slots replaced by the identity.
    pub rest: Matrix<G>,
}

pub(crate) fn generator_frame(gen: &GroupGenerator, lorentz: bool) -> Result<GeneratorFrame> {
    let m = &gen.matrix;
    let d = m.nrows();
    let mut planes: Vec<(usize, usize)> = Vec::new();
    let mut turns: Vec<Rational> = Vec::new();
    for t in &gen.rotations {
        let (p, tt) = oriented(t);
        match planes.iter().position(|q| *q == p) {
            Some(k) => turns[k] = &turns[k] + tt,
            None => {
                planes.push(p);
                turns.push(tt);
            }
        }
    }
    let mut cone = None;
    let mut exp_beta = (Rational::one(), 0);
    if lorentz && d >= 2 {
        let (a, b) = (d - 2, d - 1);
        let decoupled = (0..a).all(|i| {
            [(i, a), (i, b), (a, i), (b, i)]
                .iter()
                .all(|&(r, c)| m.get(r, c).is_zero())
        });
        let (p, q) = (m.get(a, a), m.get(a, b));
        if decoupled && m.get(b, a) == q && m.get(b, b) == p && !planes.iter().any(|&(i, j)| j >= a || i >= a) {
            if let Some((c, k)) = (p + q).as_unit().filter(|(c, _)| c.is_positive()) {
                cone = Some((a, b));
                exp_beta = (c, k);
            }
        }
    }
    let frame = Frame { planes, cone };
    let mut rest = m.map(|c| G::real(c.clone()));
    for k in 0..d {
        if frame.special(k) {
            for l in 0..d {
                rest.set(k, l, if k == l { G::one() } else { G::zero() });
                rest.set(l, k, if k == l { G::one() } else { G::zero() });
            }
        }
    }
    Ok(GeneratorFrame {
        frame,
        turns,
        exp_beta,
        rest,
    })
}

/// Exact invariance of `p` under one generator via its frame.
pub(crate) fn invariant_in_frame(p: &Poly<BoostScalar>, gf: &GeneratorFrame) -> Result<bool> {
    let q = gf.frame.to_frame(p)?;
    let rest_trivial = gf.rest.is_identity();
    for (key, part) in gf.frame.split(&q) {
        let phase = gf.frame.phase(&key, &gf.turns);
        let weight = gf.frame.cone_weight(&key);
        let Some(eig) = eigenvalue(&phase, &gf.exp_beta, weight)? else {
            return Ok(false);
        };
        let image = if rest_trivial {
            part.scale(&eig)
        } else {
            part.substitute_linear(&gf.rest)?.scale(&eig)
        };
        if image != part {
            return Ok(false);
        }
    }
    Ok(true)
}
