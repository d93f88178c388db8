use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, BoostScalar, Rational};
use crate::polyring::{Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrivialityVerdict {
    pub invariant: bool,
    pub constant: bool,
    /// `Δ_i p = p(x + e_i) - p(x)` for each lattice direction.
    pub differences: Vec<Poly<BoostScalar>>,
    /// Degree of `p` in each variable.
    pub partial_degrees: Vec<i64>,
    /// `invariant ⇒ constant`, checked on this input.
    pub implication_holds: bool,
}

/// Translation invariance under `Z^n` through exact finite differences.
/// `Δ_i p = 0` forces `deg_i p = 0`, so invariance forces constancy.
pub fn cocompact_triviality(p: &Poly<BoostScalar>, rank: usize) -> Result<TrivialityVerdict> {
    if p.nvars() != rank {
        return Err(Error::Shape(format!(
            "polynomial in {} variables for a rank {rank} lattice",
            p.nvars()
        )));
    }
    let one = BoostScalar::from_int(1);
    let differences = (0..rank)
        .map(|i| Ok(&p.translate(i, &one)? - p))
        .collect::<Result<Vec<_>>>()?;
    let partial_degrees: Vec<i64> = (0..rank).map(|i| p.degree_in(i)).collect();
    let invariant = differences.iter().all(Poly::is_zero);
    let constant = p.degree() <= 0;
    // a nonzero degree in x_i leaves a nonzero leading difference
    for (d, k) in differences.iter().zip(&partial_degrees) {
        if (*k > 0) == d.is_zero() {
            return Err(Error::Certificate(format!(
                "difference {d} inconsistent with partial degree {k}"
            )));
        }
    }
    Ok(TrivialityVerdict {
        invariant,
        constant,
        differences,
        partial_degrees,
        implication_holds: !invariant || constant,
    })
}

/// Secondary check: `p(x + e_i) = p(x)` exactly at `points` random rational
/// points for every `i`.
pub fn numeric_translation_check<R: Rng>(p: &Poly<BoostScalar>, points: usize, rng: &mut R) -> Result<bool> {
    let n = p.nvars();
    for _ in 0..points {
        let x: Vec<BoostScalar> = (0..n)
            .map(|_| BoostScalar::from_rational(rat(rng.gen_range(-50..=50), rng.gen_range(1..=7))))
            .collect();
        let base = p.eval(&x)?;
        for i in 0..n {
            let mut y = x.clone();
            y[i] = &y[i] + &BoostScalar::from_int(1);
            if p.eval(&y)? != base {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Random polynomial with small rational coefficients, total degree at most
/// `degree`; each monomial is present with probability `density`.
pub fn random_polynomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32, density: f64) -> Poly<BoostScalar> {
    let mut terms = Vec::new();
    for d in 0..=degree {
        for m in Monomial::all_of_degree(nvars, d) {
            if rng.gen_bool(density) {
                let c: Rational = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                if !c.is_zero() {
                    terms.push((m.0, BoostScalar::from_rational(c)));
                }
            }
        }
    }
    Poly::from_terms(nvars, terms).expect("consistent exponents")
}
