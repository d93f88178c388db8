use serde::Serialize;
use serde_json::{json, Value};

use super::check::{invariant_under, is_invariant};
use super::reynolds::{molien, reynolds, MolienSeries};
use crate::error::{Error, Result};
use crate::exactnum::{BoostScalar, Scalar};
use crate::lorentz::{
    detect_block_structure, enumerate_finite, involution_normal_form, GroupGenerator, GroupKind,
    GroupSpec, LorentzMatrix, Reflection,
};
use crate::polyring::{graded_span, membership, variable_names, Monomial, Poly, DEFAULT_PRODUCT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Reynolds,
    BoostCore,
    InvolutionTable,
    UnionAssembly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HilbertBasis {
    pub nvars: usize,
    /// Name the last variable `y`.
    pub lorentz: bool,
    pub generators: Vec<Poly<BoostScalar>>,
    pub provenance: Vec<Provenance>,
    pub molien: Option<MolienSeries>,
}

impl HilbertBasis {
    pub fn degrees(&self) -> Vec<i64> {
        self.generators.iter().map(Poly::degree).collect()
    }

    pub fn display(&self) -> Vec<String> {
        let names = variable_names(self.nvars, self.lorentz);
        self.generators.iter().map(|g| g.display_with(&names)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.generators,
            "degrees": self.degrees(),
            "provenance": self.provenance,
            "display": self.display(),
            "molien": self.molien.as_ref().map(MolienSeries::to_json),
        })
    }

    /// No generator lies in the algebra generated by the others.
    pub fn is_minimal(&self) -> Result<bool> {
        for (k, g) in self.generators.iter().enumerate() {
            let others: Vec<Poly<BoostScalar>> = self
                .generators
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p.clone())
                .collect();
            if membership(g, &others)?.inside {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reynolds images of monomials, degree by degree up to the Noether bound
/// `|G|` (or `max_degree` if larger), keeping each image that is new in its
/// degree. The graded dimensions are certified against the Molien series.
pub fn hilbert_basis_finite(
    g: &crate::lorentz::FiniteGroup,
    max_degree: Option<u32>,
) -> Result<HilbertBasis> {
    let n = g.dim();
    let cutoff = (g.order() as u32).max(max_degree.unwrap_or(0));
    let series = molien(g, cutoff as usize + 1)?;
    let mut gens: Vec<Poly<BoostScalar>> = Vec::new();
    let mut frac = Vec::new();
    for d in 1..=cutoff {
        let mut span = graded_span(&frac, n, d, DEFAULT_PRODUCT_CAP)?;
        for m in Monomial::all_of_degree(n, d) {
            let r = reynolds(&Poly::monomial(m.0, BoostScalar::from_int(1)), g)?;
            if r.is_zero() {
                continue;
            }
            let rf = r.map_coeffs(BoostScalar::to_frac);
            if span.insert(&rf) {
                let r = r.normalized();
                frac.push(r.map_coeffs(BoostScalar::to_frac));
                gens.push(r);
            }
        }
        let want = series.coeffs[d as usize];
        if span.dim() as u64 != want {
            return Err(Error::Certificate(format!(
                "degree {d}: invariant span has dimension {}, Molien predicts {want}",
                span.dim()
            )));
        }
    }
    let provenance = vec![Provenance::Reynolds; gens.len()];
    Ok(HilbertBasis {
        nvars: n,
        lorentz: false,
        generators: gens,
        provenance,
        molien: Some(series),
    })
}

/// Transport the reflection tables `{x, y²}` (for `κ_x`) and `{y, x²}` (for
/// `κ_y`) through the normal-form conjugator: if `C⁻¹AC = κ` then
/// `f ↦ f ∘ C⁻¹` maps `κ`-invariants to `A`-invariants.
pub fn hilbert_basis_involution(a: &LorentzMatrix) -> Result<HilbertBasis> {
    let nf = involution_normal_form(a)?;
    let x: Poly<BoostScalar> = Poly::var(2, 0);
    let y: Poly<BoostScalar> = Poly::var(2, 1);
    let table = match nf.kind {
        Reflection::KappaX => [x, y.pow(2)],
        Reflection::KappaY => [y, x.pow(2)],
    };
    let cinv = nf.conjugator.inverse()?;
    let gen = GroupGenerator::matrix(a.entries().clone());
    let mut gens = Vec::new();
    for f in &table {
        let t = f.substitute_linear(cinv.entries())?.normalized();
        if !invariant_under(&t, &gen, false)? {
            return Err(Error::Certificate(format!("transported generator {t} is not invariant")));
        }
        gens.push(t);
    }
    Ok(HilbertBasis {
        nvars: 2,
        lorentz: true,
        generators: gens,
        provenance: vec![Provenance::InvolutionTable; 2],
        molien: None,
    })
}

/// Union of a basis for the rotation block and `x_n² - y²` for a generator
/// in literal block form `R ⊕ H_β` with `β ≠ 0`.
pub fn hilbert_basis_lorentz(spec: &GroupSpec, cap: usize) -> Result<HilbertBasis> {
    let a = spec.lorentz_generator()?;
    let block = detect_block_structure(&a)?;
    if block.is_zero_boost() {
        return Err(Error::ZeroBoost);
    }
    let dim = a.dim();
    let r = block.rotation_dim();
    let mut gens = Vec::new();
    let mut provenance = Vec::new();
    if r > 0 {
        let rot = GroupGenerator {
            matrix: block.rotation.map(|c| BoostScalar::from_rational(c.clone())),
            rotations: block.rotation_tags.clone(),
        };
        let group = enumerate_finite(r, &[rot], cap)?;
        let positions: Vec<usize> = (0..r).collect();
        for p in hilbert_basis_finite(&group, None)?.generators {
            gens.push(p.embed(dim, &positions)?);
            provenance.push(Provenance::UnionAssembly);
        }
    }
    let x: Poly<BoostScalar> = Poly::var(dim, r);
    let y: Poly<BoostScalar> = Poly::var(dim, r + 1);
    gens.push(&x.pow(2) - &y.pow(2));
    provenance.push(Provenance::BoostCore);
    for p in &gens {
        if !is_invariant(p, spec)?.invariant {
            return Err(Error::Certificate(format!("assembled generator {p} is not invariant")));
        }
    }
    Ok(HilbertBasis {
        nvars: dim,
        lorentz: true,
        generators: gens,
        provenance,
        molien: None,
    })
}

/// Dispatch on the group kind. Translation lattices have only constant
/// invariants, so their basis is empty.
pub fn hilbert_basis(spec: &GroupSpec, max_degree: Option<u32>, cap: usize) -> Result<HilbertBasis> {
    match spec.kind {
        GroupKind::Finite => {
            let g = spec.enumerate(cap)?;
            let mut hb = hilbert_basis_finite(&g, max_degree)?;
            hb.lorentz = spec.signature.is_some();
            Ok(hb)
        }
        GroupKind::BoostCyclic | GroupKind::BlockProduct => hilbert_basis_lorentz(spec, cap),
        GroupKind::LatticeTranslation => Ok(HilbertBasis {
            nvars: spec.dim,
            lorentz: false,
            generators: vec![],
            provenance: vec![],
            molien: None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{involution_family, kappa_x, kappa_y, validate, RotationTag, DEFAULT_GROUP_CAP};

    fn finite(gens: Vec<GroupGenerator>, dim: usize) -> HilbertBasis {
        let g = enumerate_finite(dim, &gens, DEFAULT_GROUP_CAP).unwrap();
        hilbert_basis_finite(&g, None).unwrap()
    }

    #[test]
    fn reflections() {
        let hb = finite(vec![GroupGenerator::matrix(kappa_x())], 2);
        assert_eq!(hb.display(), vec!["x1", "x2^2"]);
        let hb = finite(vec![GroupGenerator::matrix(kappa_y())], 2);
        assert_eq!(hb.display(), vec!["x2", "x1^2"]);
        assert!(hb.is_minimal().unwrap());
    }

    #[test]
    fn order_three() {
        let tag = RotationTag::new(3, (0, 1)).unwrap();
        let hb = finite(vec![GroupGenerator::rotation(2, tag)], 2);
        assert_eq!(hb.degrees(), vec![2, 3, 3]);
        assert_eq!(
            hb.display(),
            vec!["x1^2 + x2^2", "x1^3 - 3*x1*x2^2", "x1^2*x2 - 1/3*x2^3"]
        );
        assert!(hb.is_minimal().unwrap());
    }

    #[test]
    fn involution_route_matches_reynolds_route() {
        for kind in [Reflection::KappaX, Reflection::KappaY] {
            let a = validate(&involution_family(kind, 1), 1).unwrap();
            let table = hilbert_basis_involution(&a).unwrap();
            let g = enumerate_finite(2, &[GroupGenerator::matrix(a.entries().clone())], 10).unwrap();
            let avg = hilbert_basis_finite(&g, None).unwrap();
            assert_eq!(table.degrees(), avg.degrees());
            // each route's generators lie in the other's algebra
            for p in &table.generators {
                assert!(membership(p, &avg.generators).unwrap().inside);
            }
            for p in &avg.generators {
                assert!(membership(p, &table.generators).unwrap().inside);
            }
        }
    }

    #[test]
    fn lorentz_union() {
        let spec = GroupSpec::from_json(
            r#"{"kind":"boost-cyclic","generators":[{"signature":[2,1],"entries":[
                ["1","0","0"],["0",{"2":"1/2","-2":"1/2"},{"2":"1/2","-2":"-1/2"}],
                ["0",{"2":"1/2","-2":"-1/2"},{"2":"1/2","-2":"1/2"}]]}]}"#,
        )
        .unwrap();
        let hb = hilbert_basis(&spec, None, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(hb.display(), vec!["x1", "x2^2 - y^2"]);
        assert_eq!(hb.provenance, vec![Provenance::UnionAssembly, Provenance::BoostCore]);
        let zero = GroupSpec::from_json(
            r#"{"kind":"boost-cyclic","generators":[{"signature":[1,1],"entries":[["1","0"],["0","1"]]}]}"#,
        )
        .unwrap();
        assert_eq!(hilbert_basis(&zero, None, 10), Err(Error::ZeroBoost));
    }

    #[test]
    fn lattice_is_empty() {
        let spec = GroupSpec::from_json(r#"{"kind":"lattice-translation","lattice":{"rank":3}}"#).unwrap();
        assert!(hilbert_basis(&spec, None, 10).unwrap().generators.is_empty());
    }
}
