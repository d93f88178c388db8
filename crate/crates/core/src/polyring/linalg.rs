use std::collections::BTreeMap;

use super::poly::{Monomial, Poly};
use crate::exactnum::Field;

/// Echelon basis of a span of polynomials over a field, keyed by the grevlex
/// leading monomial of each basis vector. Optionally records, for every
/// basis vector, its expression in the inserted inputs.
#[derive(Clone, Debug)]
pub struct PolySpan<F> {
    nvars: usize,
    basis: BTreeMap<Monomial, (Poly<F>, Vec<F>)>,
    inputs: usize,
}

impl<F: Field> PolySpan<F> {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            basis: BTreeMap::new(),
            inputs: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `p` against the basis; returns the remainder and the
    /// combination of basis-recorded inputs that was subtracted.
    fn reduce(&self, p: &Poly<F>) -> (Poly<F>, Vec<F>) {
        let mut rem = p.clone();
        let mut combo = vec![F::zero(); self.inputs];
        loop {
            let Some((lead, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) else {
                break;
            };
            let Some((b, bc)) = self.basis.get(&lead) else {
                // leading monomial is not a pivot: peel it off and continue
                // on the tail so the remainder is fully reduced
                let head = Poly::monomial(lead.0.clone(), c.clone());
                let tail = &rem - &head;
                let (tr, tc) = self.reduce(&tail);
                return (&head + &tr, add_vec(&combo, &tc));
            };
            rem = &rem - &b.scale(&c);
            for (k, v) in bc.iter().enumerate() {
                combo[k] = combo[k].clone() + c.clone() * v.clone();
            }
        }
        (rem, combo)
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        assert_eq!(p.nvars(), self.nvars);
        self.reduce(p).0.is_zero()
    }

    /// Insert `p`; returns true when it enlarged the span.
    pub fn insert(&mut self, p: &Poly<F>) -> bool {
        assert_eq!(p.nvars(), self.nvars);
        let idx = self.inputs;
        self.inputs += 1;
        for (_, combo) in self.basis.values_mut() {
            combo.push(F::zero());
        }
        let (rem, combo) = self.reduce(p);
        if rem.is_zero() {
            return false;
        }
        // rem = p - Σ combo_k input_k
        let mut expr: Vec<F> = combo.iter().map(|v| -v.clone()).collect();
        expr.resize(self.inputs, F::zero());
        expr[idx] = F::one();
        let (lead, lc) = rem
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero remainder");
        let inv = lc.inv().expect("nonzero leading coefficient");
        let rem = rem.scale(&inv);
        let expr: Vec<F> = expr.into_iter().map(|v| v * inv.clone()).collect();
        self.basis.insert(lead, (rem, expr));
        true
    }

    /// Express `p` in the inserted inputs, if it lies in the span.
    pub fn express(&self, p: &Poly<F>) -> Option<Vec<F>> {
        let (rem, combo) = self.reduce(p);
        rem.is_zero().then_some(combo)
    }
}

fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// Dimension of the span of `polys`.
pub fn rank<F: Field>(nvars: usize, polys: &[Poly<F>]) -> usize {
    let mut span = PolySpan::new(nvars);
    for p in polys {
        span.insert(p);
    }
    span.dim()
}

/// Coefficients `c` with `Σ c_k columns[k] = target`, if any exist.
pub fn solve<F: Field>(nvars: usize, columns: &[Poly<F>], target: &Poly<F>) -> Option<Vec<F>> {
    let mut span = PolySpan::new(nvars);
    for p in columns {
        span.insert(p);
    }
    let combo = span.express(target)?;
    debug_assert!({
        let back = columns
            .iter()
            .zip(&combo)
            .fold(Poly::zero(nvars), |acc, (p, c)| &acc + &p.scale(c));
        (&back - target).is_zero()
    });
    Some(combo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    #[test]
    fn no_solution_for_x_squared() {
        // c * (x^2 - y^2) = x^2 has no solution
        let x2: Poly<Rational> = Poly::monomial(vec![2, 0], int(1));
        let y2: Poly<Rational> = Poly::monomial(vec![0, 2], int(1));
        let rho = &x2 - &y2;
        assert!(solve(2, std::slice::from_ref(&rho), &x2).is_none());
        assert_eq!(solve(2, std::slice::from_ref(&rho), &rho.scale(&int(3))), Some(vec![int(3)]));
    }

    #[test]
    fn rank_and_express() {
        let x: Poly<Rational> = Poly::var(2, 0);
        let y: Poly<Rational> = Poly::var(2, 1);
        let cols = vec![&x + &y, &x - &y, x.scale(&int(2))];
        assert_eq!(rank(2, &cols), 2);
        let c = solve(2, &cols, &y).unwrap();
        let back = cols
            .iter()
            .zip(&c)
            .fold(Poly::zero(2), |acc, (p, k)| &acc + &p.scale(k));
        assert_eq!(back, y);
    }
}
