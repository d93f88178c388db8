use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{BoostScalar, Coeff, Rational};
use crate::matrix::Matrix;

/// Exponent vector. Orders by graded reverse lexicographic order, so the
/// largest key of a term map is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All exponent vectors in `nvars` variables of total degree `d`, in
    /// descending grevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(nvars, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C = BoostScalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), C::one());
        p
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial(exps), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, C)>>(nvars: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Shape(format!(
                    "exponent vector of length {} in a polynomial with {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| m.0[var] as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() <= 0
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Rescale so the grevlex-leading coefficient is 1, when that
    /// coefficient is a unit; otherwise return a copy.
    pub fn normalized(&self) -> Self {
        match self.leading_term().and_then(|(_, c)| c.unit_inverse()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Poly<D>> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials in different numbers of variables"
        );
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut sq = self.clone();
        let mut n = e;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Replace every variable `x_i` by the polynomial `images[i]`.
    pub fn compose(&self, images: &[Poly<C>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Shape(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let target = images.first().map_or(0, Poly::nvars);
        if images.iter().any(|q| q.nvars != target) {
            return Err(Error::Shape("images live in different polynomial rings".into()));
        }
        let mut powers: HashMap<(usize, u32), Poly<C>> = HashMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                term = &term * &pw;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `p ∘ A`, i.e. `x ↦ p(A x)`: variable `x_i` becomes `Σ_j A_ij x_j`.
    pub fn substitute_linear(&self, a: &Matrix<C>) -> Result<Self> {
        if !a.is_square() || a.nrows() != self.nvars {
            return Err(Error::Shape(format!(
                "substitution matrix is {}x{} for a polynomial in {} variables",
                a.nrows(),
                a.ncols(),
                self.nvars
            )));
        }
        let n = self.nvars;
        let images: Vec<Poly<C>> = (0..n)
            .map(|i| {
                let mut q = Poly::zero(n);
                for j in 0..n {
                    q.add_term(Monomial::var(n, j), a.get(i, j).clone());
                }
                q
            })
            .collect();
        self.compose(&images)
    }

    /// `x ↦ p(x + shift * e_var)`.
    pub fn translate(&self, var: usize, shift: &C) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Shape(format!("no variable {var} in {} variables", self.nvars)));
        }
        let images: Vec<Poly<C>> = (0..self.nvars)
            .map(|i| {
                let x = Poly::var(self.nvars, i);
                if i == var {
                    &x + &Poly::constant(self.nvars, shift.clone())
                } else {
                    x
                }
            })
            .collect();
        self.compose(&images)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, c.clone() * C::from_i64(e as i64));
        }
        out
    }

    /// Component `i` is `∂p/∂x_i`.
    pub fn gradient(&self) -> PolyMap<C> {
        PolyMap {
            components: (0..self.nvars).map(|i| self.derivative(i)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::Shape("evaluation point has the wrong dimension".into()));
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Re-index into a ring with `nvars` variables; variable `i` of `self`
    /// becomes variable `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.nvars || positions.iter().any(|&p| p >= nvars) {
            return Err(Error::Shape("invalid embedding of polynomial variables".into()));
        }
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &p) in positions.iter().enumerate() {
                e[p] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Render with the given variable names, terms in descending grevlex order.
    pub fn display_with(&self, names: &[String]) -> String
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{e}", names[i])
                    }
                })
                .collect();
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.starts_with('(') => (true, rest.to_string()),
                _ => (false, cs),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (mono.is_empty(), mag.as_str()) {
                (true, _) => out.push_str(&mag),
                (false, "1") => out.push_str(&mono.join("*")),
                (false, _) => {
                    out.push_str(&mag);
                    out.push('*');
                    out.push_str(&mono.join("*"));
                }
            }
        }
        out
    }
}

/// Default display names `x1..xn`; with `lorentz = true` the last variable
/// is the time coordinate `y`, and the plane `(1,1)` reads `x, y`.
pub fn variable_names(nvars: usize, lorentz: bool) -> Vec<String> {
    if lorentz && nvars == 2 {
        return vec!["x".into(), "y".into()];
    }
    (0..nvars)
        .map(|i| {
            if lorentz && i + 1 == nvars {
                "y".to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

impl<C: Coeff + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&variable_names(self.nvars, false)))
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}](", self.nvars)?;
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{:?}", m.0)?;
        }
        write!(f, ")")
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

/// Ordered list of polynomials in a common ring; a polynomial map
/// `R^nvars -> R^len`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap<C = BoostScalar> {
    components: Vec<Poly<C>>,
    nvars: usize,
}

impl<C: Coeff> PolyMap<C> {
    pub fn new(components: Vec<Poly<C>>) -> Result<Self> {
        let nvars = components
            .first()
            .map(Poly::nvars)
            .ok_or_else(|| Error::Shape("a polynomial map needs at least one component".into()))?;
        if components.iter().any(|p| p.nvars() != nvars) {
            return Err(Error::Shape("components live in different polynomial rings".into()));
        }
        Ok(Self { components, nvars })
    }

    /// The identity map of `R^n`.
    pub fn identity(n: usize) -> Self {
        Self {
            components: (0..n).map(|i| Poly::var(n, i)).collect(),
            nvars: n,
        }
    }

    pub fn components(&self) -> &[Poly<C>] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() || self.nvars != other.nvars {
            return Err(Error::Shape("cannot add polynomial maps of different shapes".into()));
        }
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
            nvars: self.nvars,
        })
    }

    /// Apply a constant matrix on the output side: `x ↦ M F(x)`.
    pub fn left_mul(&self, m: &Matrix<C>) -> Result<Self> {
        if m.ncols() != self.len() {
            return Err(Error::Shape("matrix does not match the map's output dimension".into()));
        }
        let components = (0..m.nrows())
            .map(|i| {
                self.components
                    .iter()
                    .enumerate()
                    .fold(Poly::zero(self.nvars), |acc, (j, p)| {
                        &acc + &p.scale(m.get(i, j))
                    })
            })
            .collect();
        Ok(Self {
            components,
            nvars: self.nvars,
        })
    }

    /// `x ↦ F(A x)`.
    pub fn substitute_linear(&self, a: &Matrix<C>) -> Result<Self> {
        Ok(Self {
            components: self
                .components
                .iter()
                .map(|p| p.substitute_linear(a))
                .collect::<Result<_>>()?,
            nvars: self.nvars,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    c: C,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr<C> {
    nvars: usize,
    terms: Vec<TermRepr<C>>,
}

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRepr {
                    c: c.clone(),
                    e: m.0.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::<C>::deserialize(deserializer)?;
        Poly::from_terms(repr.nvars, repr.terms.into_iter().map(|t| (t.e, t.c)))
            .map_err(serde::de::Error::custom)
    }
}

/// Convenience: a rational polynomial lifted into the boost ring.
pub fn lift_rational(p: &Poly<Rational>) -> Poly<BoostScalar> {
    p.map_coeffs(|c| BoostScalar::from_rational(c.clone()))
}

/// Convenience: a boost-ring polynomial with only rational coefficients.
pub fn as_rational_poly(p: &Poly<BoostScalar>) -> Option<Poly<Rational>> {
    p.try_map_coeffs(BoostScalar::as_rational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    type Q = Poly<Rational>;

    fn x() -> Q {
        Poly::var(2, 0)
    }

    fn y() -> Q {
        Poly::var(2, 1)
    }

    fn c(v: i64) -> Q {
        Poly::constant(2, int(v))
    }

    #[test]
    fn grevlex_order() {
        let ms = Monomial::all_of_degree(2, 3);
        let exps: Vec<_> = ms.iter().map(|m| m.0.clone()).collect();
        assert_eq!(exps, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        // x*z vs y^2 in three variables: grevlex puts y^2 above x*z
        assert!(Monomial(vec![0, 2, 0]) > Monomial(vec![1, 0, 1]));
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(Q::zero(2).degree(), -1);
        assert_eq!(c(5).degree(), 0);
        assert_eq!((&x() - &x()).num_terms(), 0);
    }

    #[test]
    fn gradients() {
        let rho = &(&x() * &x()) - &(&y() * &y());
        let g = rho.gradient();
        assert_eq!(g.components(), &[x().scale(&int(2)), y().scale(&int(-2))]);
        let g0 = c(7).gradient();
        assert!(g0.components().iter().all(Poly::is_zero));
        let cubic = &x().pow(3) - &(&x() * &y().pow(2)).scale(&int(3));
        let g = cubic.gradient();
        assert_eq!(
            g.components()[0],
            &x().pow(2).scale(&int(3)) - &y().pow(2).scale(&int(3))
        );
        assert_eq!(g.components()[1], (&x() * &y()).scale(&int(-6)));
    }

    #[test]
    fn identity_substitution() {
        let p = &(&x().pow(3) + &(&x() * &y()).scale(&rat(2, 3))) + &c(4);
        assert_eq!(p.substitute_linear(&Matrix::identity(2)).unwrap(), p);
        assert!(matches!(
            p.substitute_linear(&Matrix::identity(3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn translation() {
        let p = &x().pow(2) + &y();
        let d = &p.translate(0, &int(1)).unwrap() - &p;
        assert_eq!(d, &x().scale(&int(2)) + &c(1));
    }

    #[test]
    fn embed_and_display() {
        let p = &x().pow(2) - &y().scale(&rat(1, 3));
        let e = p.embed(4, &[1, 3]).unwrap();
        assert_eq!(e.to_string(), "x2^2 - 1/3*x4");
        assert_eq!(
            e.display_with(&variable_names(4, true)),
            "x2^2 - 1/3*y"
        );
        assert_eq!(Q::zero(1).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = lift_rational(&(&x().pow(2) - &y().pow(2)));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"nvars":2,"terms":[{"c":"1","e":[2,0]},{"c":"-1","e":[0,2]}]}"#
        );
        let back: Poly<BoostScalar> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        let bad = r#"{"nvars":2,"terms":[{"c":"1","e":[2]}]}"#;
        assert!(serde_json::from_str::<Poly<BoostScalar>>(bad).is_err());
    }

    #[test]
    fn polymap_shapes() {
        assert!(PolyMap::<Rational>::new(vec![]).is_err());
        assert!(PolyMap::new(vec![x(), Poly::var(3, 0)]).is_err());
        let id = PolyMap::<Rational>::identity(2);
        assert_eq!(id.len(), 2);
    }
}
