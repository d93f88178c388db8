use std::fmt;

use super::linalg::PolySpan;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};

/// Default cap on the number of generator products enumerated.
pub const DEFAULT_PRODUCT_CAP: usize = 1_000_000;

/// A polynomial expression in the generators: `Σ c · Π g_i^{e_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F> {
    pub terms: Vec<(Vec<u32>, F)>,
}

impl<F: Field> Witness<F> {
    /// Evaluate the expression at the given generators.
    pub fn evaluate(&self, gens: &[Poly<F>], nvars: usize) -> Poly<F> {
        let mut out = Poly::zero(nvars);
        for (exps, c) in &self.terms {
            let mut term = Poly::constant(nvars, c.clone());
            for (g, &e) in gens.iter().zip(exps) {
                if e > 0 {
                    term = &term * &g.pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }
}

impl<F: Field + fmt::Display> fmt::Display for Witness<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exps, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("g{}", i + 1)
                    } else {
                        format!("g{}^{e}", i + 1)
                    }
                })
                .collect();
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match (factors.is_empty(), cs.as_str()) {
                (true, _) => write!(f, "{cs}")?,
                (false, "1") => write!(f, "{}", factors.join("*"))?,
                _ => write!(f, "{cs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipResult<F> {
    pub inside: bool,
    pub witness: Option<Witness<F>>,
}

/// Enumerate every exponent vector `e` with `Σ e_i w_i` in the admissible
/// range, together with the product `Π g_i^{e_i}`.
fn products<F: Field>(
    gens: &[Poly<F>],
    weights: &[u32],
    max_weight: u32,
    exact: bool,
    nvars: usize,
    cap: usize,
) -> Result<Vec<(Vec<u32>, Poly<F>)>> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; gens.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Field>(
        i: usize,
        left: u32,
        cur: Poly<F>,
        gens: &[Poly<F>],
        weights: &[u32],
        exact: bool,
        exps: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Poly<F>)>,
        cap: usize,
    ) -> Result<()> {
        if i == gens.len() {
            if !exact || left == 0 {
                if out.len() >= cap {
                    return Err(Error::BoundExceeded { cap });
                }
                out.push((exps.clone(), cur));
            }
            return Ok(());
        }
        let w = weights[i];
        let mut e = 0;
        let mut acc = cur;
        loop {
            exps[i] = e;
            rec(i + 1, left - e * w, acc.clone(), gens, weights, exact, exps, out, cap)?;
            if (e + 1) * w > left {
                break;
            }
            e += 1;
            acc = &acc * &gens[i];
        }
        exps[i] = 0;
        Ok(())
    }
    rec(
        0,
        max_weight,
        Poly::one(nvars),
        gens,
        weights,
        exact,
        &mut exps,
        &mut out,
        cap,
    )?;
    Ok(out)
}

/// Decide `p ∈ K[gens]` (K the fraction field of the coefficients) by
/// degree-bounded exact linear algebra.
///
/// Products of generators are weighted by total degree and enumerated up to
/// `deg p`; when `p` and every generator are homogeneous only products of
/// degree exactly `deg p` are used.
pub fn membership<C: Scalar>(p: &Poly<C>, gens: &[Poly<C>]) -> Result<MembershipResult<C::Frac>> {
    membership_with_cap(p, gens, DEFAULT_PRODUCT_CAP)
}

pub fn membership_with_cap<C: Scalar>(
    p: &Poly<C>,
    gens: &[Poly<C>],
    cap: usize,
) -> Result<MembershipResult<C::Frac>> {
    let nvars = p.nvars();
    let pf = p.map_coeffs(C::to_frac);
    let gf: Vec<Poly<C::Frac>> = gens.iter().map(|g| g.map_coeffs(C::to_frac)).collect();
    membership_in_field(&pf, &gf, nvars, cap)
}

pub(crate) fn membership_in_field<F: Field>(
    p: &Poly<F>,
    gens: &[Poly<F>],
    nvars: usize,
    cap: usize,
) -> Result<MembershipResult<F>> {
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::Shape("generator in a different polynomial ring".into()));
        }
        if g.degree() < 1 {
            return Err(Error::Shape("generators must be nonconstant".into()));
        }
    }
    if p.is_zero() {
        return Ok(MembershipResult {
            inside: true,
            witness: Some(Witness { terms: vec![] }),
        });
    }
    let d = p.degree() as u32;
    let weights: Vec<u32> = gens.iter().map(|g| g.degree() as u32).collect();
    let homogeneous = p.is_homogeneous() && gens.iter().all(Poly::is_homogeneous);
    let prods = products(gens, &weights, d, homogeneous, nvars, cap)?;
    let mut span = PolySpan::new(nvars);
    for (_, q) in &prods {
        span.insert(q);
    }
    match span.express(p) {
        Some(combo) => {
            let terms = prods
                .into_iter()
                .zip(combo)
                .filter(|(_, c)| !c.is_zero())
                .map(|((e, _), c)| (e, c))
                .collect();
            Ok(MembershipResult {
                inside: true,
                witness: Some(Witness { terms }),
            })
        }
        None => Ok(MembershipResult {
            inside: false,
            witness: None,
        }),
    }
}

/// Span of the products of `gens` whose weighted degree is exactly `d`,
/// i.e. the degree-`d` piece of the algebra they generate when every
/// generator is homogeneous.
pub fn graded_span<F: Field>(gens: &[Poly<F>], nvars: usize, d: u32, cap: usize) -> Result<PolySpan<F>> {
    if gens.iter().any(|g| g.degree() < 1 || !g.is_homogeneous()) {
        return Err(Error::Shape("graded pieces need homogeneous nonconstant generators".into()));
    }
    let weights: Vec<u32> = gens.iter().map(|g| g.degree() as u32).collect();
    let mut span = PolySpan::new(nvars);
    for (_, q) in products(gens, &weights, d, true, nvars, cap)? {
        span.insert(&q);
    }
    Ok(span)
}
