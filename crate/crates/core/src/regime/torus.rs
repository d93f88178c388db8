use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, rational_to_f64, Rational};
use crate::polyring::Poly;

/// Default cap on the band limit per axis.
pub const DEFAULT_BAND_CAP: u32 = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourierTerm {
    pub k: Vec<i64>,
    #[serde(default)]
    pub cos: f64,
    #[serde(default)]
    pub sin: f64,
}

/// `f(x) = Σ cos_k · cos(2π k·x) + sin_k · sin(2π k·x)`, a smooth
/// `Z^n`-periodic function with finite support.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourierSpec {
    pub rank: usize,
    pub terms: Vec<FourierTerm>,
}

impl FourierSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("Fourier JSON: {e}")))?;
        if spec.rank == 0 {
            return Err(Error::Parse("rank must be positive".into()));
        }
        for t in &spec.terms {
            if t.k.len() != spec.rank {
                return Err(Error::Parse(format!("frequency {:?} has the wrong length", t.k)));
            }
            if !t.cos.is_finite() || !t.sin.is_finite() {
                return Err(Error::Parse("amplitudes must be finite".into()));
            }
        }
        Ok(spec)
    }

    pub fn band_limit(&self) -> u32 {
        self.terms
            .iter()
            .flat_map(|t| t.k.iter())
            .map(|k| k.unsigned_abs() as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let phase: f64 = t.k.iter().zip(x).map(|(k, xi)| *k as f64 * xi).sum::<f64>() * TAU;
                t.cos * phase.cos() + t.sin * phase.sin()
            })
            .sum()
    }
}

/// `σ(x) = (cos 2πx₁, sin 2πx₁, …, cos 2πx_n, sin 2πx_n)`.
pub fn sigma(x: &[f64]) -> Vec<f64> {
    x.iter().flat_map(|xi| [(TAU * xi).cos(), (TAU * xi).sin()]).collect()
}

/// `cos kθ = T_k(c)` and `sin kθ = s U_{k-1}(c)` for `k ≥ 0`, as exact
/// polynomials in the pair `(c, s)` at slots `(2i, 2i+1)` of `2n` variables.
fn chebyshev(nvars: usize, axis: usize, k: u64) -> (Poly<Rational>, Poly<Rational>) {
    let one = Poly::one(nvars);
    let c = Poly::var(nvars, 2 * axis);
    let s = Poly::var(nvars, 2 * axis + 1);
    let two_c = c.scale(&int(2));
    // T_0 = 1, T_1 = c; U_0 = 1, U_1 = 2c
    let (mut t0, mut t1) = (one.clone(), c.clone());
    let (mut u0, mut u1) = (Poly::zero(nvars), one);
    for _ in 1..k.max(1) {
        let t2 = &(&two_c * &t1) - &t0;
        let u2 = &(&two_c * &u1) - &u0;
        (t0, t1) = (t1, t2);
        (u0, u1) = (u1, u2);
    }
    match k {
        0 => (Poly::one(nvars), Poly::zero(nvars)),
        _ => (t1, &s * &u1),
    }
}

/// `(cos 2π k·x, sin 2π k·x)` as exact polynomials in `σ`, combining the
/// axes by the angle-addition formulas.
pub fn harmonic(k: &[i64]) -> (Poly<Rational>, Poly<Rational>) {
    let nvars = 2 * k.len();
    let mut cos = Poly::one(nvars);
    let mut sin = Poly::zero(nvars);
    for (axis, &ki) in k.iter().enumerate() {
        let (c, s) = chebyshev(nvars, axis, ki.unsigned_abs());
        let s = if ki < 0 { -&s } else { s };
        let nc = &(&cos * &c) - &(&sin * &s);
        let ns = &(&sin * &c) + &(&cos * &s);
        cos = nc;
        sin = ns;
    }
    (cos, sin)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReconstructionResult {
    /// `F` with `f = F ∘ σ`, in variables `c1, s1, …, cn, sn`.
    pub polynomial: Poly<f64>,
    pub display: String,
    pub band_limit: u32,
    pub grid_points: usize,
    pub sup_error: f64,
    /// `max |σ(x + e_i) - σ(x)|` over the grid, the periodicity of `σ`.
    pub periodicity_error: f64,
}

pub fn torus_variable_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        return vec!["c".into(), "s".into()];
    }
    (1..=rank).flat_map(|i| [format!("c{i}"), format!("s{i}")]).collect()
}

/// Double-double accumulator for evaluating `F ∘ σ`. Chebyshev expansions
/// at band limit 16 carry coefficient mass near `1e11` in two dimensions,
/// which plain `f64` sums cannot resolve to `1e-10`.
#[derive(Clone, Copy, Debug)]
struct Dd(f64, f64);

impl Dd {
    fn from_rational(r: &Rational) -> Self {
        let hi = rational_to_f64(r);
        let lo = match Rational::from_float(hi) {
            Some(h) => rational_to_f64(&(r - h)),
            None => 0.0,
        };
        Dd(hi, lo)
    }

    fn add(self, o: Dd) -> Dd {
        let s = self.0 + o.0;
        let bb = s - self.0;
        let err = (self.0 - (s - bb)) + (o.0 - bb);
        let lo = err + self.1 + o.1;
        let hi = s + lo;
        Dd(hi, lo - (hi - s))
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.0 * o.0;
        let err = self.0.mul_add(o.0, -p);
        let lo = err + self.0 * o.1 + self.1 * o.0;
        let hi = p + lo;
        Dd(hi, lo - (hi - p))
    }
}

/// Exact `F` as a list of `(exponents, coefficient)` ready for evaluation.
struct Compiled {
    terms: Vec<(Vec<u32>, Dd)>,
    max_exp: u32,
}

impl Compiled {
    fn new(p: &Poly<Rational>) -> Self {
        let terms: Vec<(Vec<u32>, Dd)> =
            p.terms().map(|(m, c)| (m.exps().to_vec(), Dd::from_rational(c))).collect();
        let max_exp = terms.iter().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0);
        Compiled { terms, max_exp }
    }

    fn eval(&self, point: &[f64]) -> f64 {
        let powers: Vec<Vec<Dd>> = point
            .iter()
            .map(|&v| {
                let mut row = vec![Dd(1.0, 0.0)];
                for _ in 0..self.max_exp {
                    let last = *row.last().expect("nonempty");
                    row.push(last.mul(Dd(v, 0.0)));
                }
                row
            })
            .collect();
        let mut acc = Dd(0.0, 0.0);
        for (exps, c) in &self.terms {
            let mut t = *c;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t = t.mul(powers[i][e as usize]);
                }
            }
            acc = acc.add(t);
        }
        acc.0 + acc.1
    }
}

/// Express `f` as a polynomial in `σ` and measure `|f - F ∘ σ|` on the
/// uniform grid with `4K` points per axis.
///
/// Amplitudes enter `F` as the exact binary rationals they are; the reported
/// `polynomial` rounds those coefficients back to `f64`.
pub fn torus_reconstruct(f: &FourierSpec, cap: u32) -> Result<ReconstructionResult> {
    let k = f.band_limit();
    if k > cap {
        return Err(Error::BandLimitTooLarge { requested: k, cap });
    }
    let n = f.rank;
    let mut exact: Poly<Rational> = Poly::zero(2 * n);
    for t in &f.terms {
        let (c, s) = harmonic(&t.k);
        let amp = |a: f64| {
            Rational::from_float(a).ok_or_else(|| Error::Parse(format!("amplitude {a} is not finite")))
        };
        exact = &(&exact + &c.scale(&amp(t.cos)?)) + &s.scale(&amp(t.sin)?);
    }
    let compiled = Compiled::new(&exact);
    let poly = exact.map_coeffs(rational_to_f64);
    let per_axis = (4 * k as usize).max(1);
    let total = per_axis.checked_pow(n as u32).unwrap_or(usize::MAX);
    if total > 50_000_000 {
        return Err(Error::BandLimitTooLarge { requested: k, cap });
    }
    let mut sup: f64 = 0.0;
    let mut periodic: f64 = 0.0;
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        let x: Vec<f64> = idx.iter().map(|&j| j as f64 / per_axis as f64).collect();
        let sx = sigma(&x);
        sup = sup.max((compiled.eval(&sx) - f.eval(&x)).abs());
        for i in 0..n {
            let mut y = x.clone();
            y[i] += 1.0;
            let sy = sigma(&y);
            for (a, b) in sx.iter().zip(&sy) {
                periodic = periodic.max((a - b).abs());
            }
        }
        for j in idx.iter_mut() {
            *j += 1;
            if *j < per_axis {
                break;
            }
            *j = 0;
        }
    }
    let display = poly.display_with(&torus_variable_names(n));
    Ok(ReconstructionResult {
        polynomial: poly,
        display,
        band_limit: k,
        grid_points: total,
        sup_error: sup,
        periodicity_error: periodic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(rank: usize, terms: &[(&[i64], f64, f64)]) -> FourierSpec {
        FourierSpec {
            rank,
            terms: terms
                .iter()
                .map(|(k, c, s)| FourierTerm {
                    k: k.to_vec(),
                    cos: *c,
                    sin: *s,
                })
                .collect(),
        }
    }

    #[test]
    fn double_angle() {
        let (c, s) = harmonic(&[2]);
        let cc: Poly<Rational> = Poly::var(2, 0);
        let ss: Poly<Rational> = Poly::var(2, 1);
        assert_eq!(c, &cc.pow(2).scale(&int(2)) - &Poly::one(2));
        assert_eq!(s, (&cc * &ss).scale(&int(2)));
        let (c3, _) = harmonic(&[3]);
        assert_eq!(c3, &cc.pow(3).scale(&int(4)) - &cc.scale(&int(3)));
        let (_, sm) = harmonic(&[-1]);
        assert_eq!(sm, -&ss);
    }

    #[test]
    fn reconstructions() {
        let r = torus_reconstruct(&spec(1, &[(&[1], 1.0, 0.0)]), DEFAULT_BAND_CAP).unwrap();
        assert_eq!(r.display, "c");
        assert!(r.sup_error < 1e-15);
        let r = torus_reconstruct(&spec(1, &[(&[2], 1.0, 0.0)]), DEFAULT_BAND_CAP).unwrap();
        assert_eq!(r.display, "2*c^2 - 1");
        let fine = FourierSpec {
            rank: 1,
            terms: spec(1, &[(&[2], 1.0, 0.0)]).terms,
        };
        // 128-point grid: evaluate directly
        let mut sup: f64 = 0.0;
        for j in 0..128 {
            let x = j as f64 / 128.0;
            sup = sup.max((r.polynomial.eval(&sigma(&[x])).unwrap() - fine.eval(&[x])).abs());
        }
        assert!(sup < 1e-12);
        let r = torus_reconstruct(&spec(1, &[(&[1], 0.0, 1.0), (&[2], 1.0, 0.0)]), 32).unwrap();
        assert_eq!(r.display, "2*c^2 + s - 1");
        // sin(2πx1)cos(2πx2) = (sin 2π(x1+x2) + sin 2π(x1-x2))/2
        let r = torus_reconstruct(&spec(2, &[(&[1, 1], 0.0, 0.5), (&[1, -1], 0.0, 0.5)]), 32).unwrap();
        assert_eq!(r.display, "s1*c2");
        assert!(r.sup_error < 1e-14);
        assert!(r.periodicity_error < 1e-14);
    }

    #[test]
    fn high_band_two_dimensional() {
        let f = spec(2, &[(&[16, 16], 0.3, -0.7), (&[16, -15], 1.1, 0.1), (&[3, 0], 0.0, 0.25)]);
        let r = torus_reconstruct(&f, DEFAULT_BAND_CAP).unwrap();
        assert_eq!(r.grid_points, 64 * 64);
        assert!(r.sup_error < 1e-10, "{}", r.sup_error);
    }

    #[test]
    fn band_cap() {
        let r = torus_reconstruct(&spec(1, &[(&[40], 1.0, 0.0)]), DEFAULT_BAND_CAP);
        assert_eq!(r, Err(Error::BandLimitTooLarge { requested: 40, cap: 32 }));
    }
}
