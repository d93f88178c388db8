use std::fs;
use std::path::Path;

use lorinv::exactnum::{format_rational, BoostScalar};
use lorinv::invariant::{check_equivariant, hilbert_basis as basis, is_invariant, molien as molien_series};
use lorinv::lorentz::{
    detect_block_structure, involution_normal_form, matrix_to_json, parse_lorentz_matrix, GroupSpec,
};
use lorinv::polyring::{membership_with_cap, variable_names, Poly, PolyMap};
use lorinv::regime::{
    cocompact_triviality, numeric_translation_check, schwarz_gap_report, separate_orbits, torus_reconstruct,
    FourierSpec, STEP_WINDOW,
};
use lorinv::{Error, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::Global;

/// Default tolerance for the gap report's orbit deviation.
const GAP_TOLERANCE: f64 = 1e-10;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, what: &str) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{what} JSON: {e}")))
}

fn unit_string((c, k): &(lorinv::exactnum::Rational, i64)) -> String {
    BoostScalar::monomial(c.clone(), *k).to_string()
}

pub fn classify(path: &Path) -> Result<Value> {
    let a = parse_lorentz_matrix(&read(path)?)?;
    let involution = if a.n() == 1 {
        match involution_normal_form(&a) {
            Ok(nf) => json!({
                "kind": nf.kind,
                "conjugator": matrix_to_json(nf.conjugator.entries(), Some(1)),
                "exp_beta": unit_string(&nf.exp_beta),
            }),
            Err(Error::NotInvolutive) => Value::Null,
            Err(Error::Central) => json!({"central": true}),
            Err(e @ Error::NotExact(_)) => json!({"error": e.to_string()}),
            Err(e) => return Err(e),
        }
    } else {
        Value::Null
    };
    let block = match detect_block_structure(&a) {
        Ok(b) => json!({
            "rotation": b.rotation.to_rows().iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rotation_tags": b.rotation_tags.iter()
                .map(|t| json!({"order": t.order, "plane": [t.plane.0, t.plane.1]}))
                .collect::<Vec<_>>(),
            "boost": !b.is_zero_boost(),
            "exp_beta": unit_string(&b.exp_beta),
        }),
        Err(Error::NotBlock(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "lorentz": true,
        "signature": [a.n(), 1],
        "component": a.component()?,
        "involution": involution,
        "block": block,
    }))
}

fn group(path: &Path) -> Result<GroupSpec> {
    GroupSpec::from_json(&read(path)?)
}

pub fn hilbert_basis(path: &Path, max_degree: Option<u32>, cap: usize) -> Result<Value> {
    let spec = group(path)?;
    let hb = basis(&spec, max_degree, cap)?;
    let mut out = hb.to_json();
    out["kind"] = serde_json::to_value(spec.kind).expect("kind serializes");
    Ok(out)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolyOrMap {
    Map { components: Vec<Poly<BoostScalar>> },
    Poly(Poly<BoostScalar>),
}

pub fn verify(group_path: &Path, poly_path: &Path) -> Result<Value> {
    let spec = group(group_path)?;
    match parse::<PolyOrMap>(poly_path, "polynomial")? {
        PolyOrMap::Poly(p) => {
            let r = is_invariant(&p, &spec)?;
            Ok(json!({"invariant": r.invariant, "failing_generator": r.failing_generator}))
        }
        PolyOrMap::Map { components } => {
            let r = check_equivariant(&PolyMap::new(components)?, &spec)?;
            Ok(json!({"equivariant": r.equivariant, "failing_generator": r.failing_generator}))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Generators {
    Wrapped { generators: Vec<Poly<BoostScalar>> },
    List(Vec<Poly<BoostScalar>>),
}

pub fn membership(gens_path: &Path, poly_path: &Path, cap: usize) -> Result<Value> {
    let gens = match parse::<Generators>(gens_path, "generators")? {
        Generators::Wrapped { generators } | Generators::List(generators) => generators,
    };
    let p: Poly<BoostScalar> = parse(poly_path, "polynomial")?;
    let r = membership_with_cap(&p, &gens, cap)?;
    let names = variable_names(p.nvars(), false);
    Ok(json!({
        "inside": r.inside,
        "witness": r.witness.map(|w| w.to_string()),
        "generators": gens.iter().map(|g| g.display_with(&names)).collect::<Vec<_>>(),
    }))
}

pub fn molien(path: &Path, degree: usize, cap: usize) -> Result<Value> {
    let g = group(path)?.enumerate(cap)?;
    let series = molien_series(&g, degree + 1)?;
    let mut out = series.to_json();
    out["group_order"] = json!(g.order());
    Ok(out)
}

fn point(text: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::Parse(format!("expected X,Y, got {text:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let x = parts[0].parse().map_err(|_| bad())?;
    let y = parts[1].parse().map_err(|_| bad())?;
    Ok((x, y))
}

pub fn orbit(beta: f64, p: &str, q: &str, g: &Global) -> Result<Value> {
    let v = separate_orbits(point(p)?, point(q)?, beta, g.tolerance.unwrap_or(STEP_WINDOW))?;
    Ok(serde_json::to_value(v).expect("verdict serializes"))
}

pub fn gap(beta: f64, samples: usize, t: f64, g: &Global) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let r = schwarz_gap_report(beta, samples, t, g.tolerance.unwrap_or(GAP_TOLERANCE), &mut rng)?;
    Ok(serde_json::to_value(r).expect("report serializes"))
}

pub fn cocompact(path: &Path, rank: usize, points: usize, g: &Global) -> Result<Value> {
    let p: Poly<BoostScalar> = parse(path, "polynomial")?;
    let v = cocompact_triviality(&p, rank)?;
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let numeric = numeric_translation_check(&p, points, &mut rng)?;
    let names = variable_names(rank, false);
    Ok(json!({
        "invariant": v.invariant,
        "constant": v.constant,
        "implication_holds": v.implication_holds,
        "partial_degrees": v.partial_degrees,
        "differences": v.differences.iter().map(|d| d.display_with(&names)).collect::<Vec<_>>(),
        "numeric_invariant": numeric,
        "numeric_agrees": numeric == v.invariant,
    }))
}

pub fn torus(path: &Path, band_cap: u32) -> Result<Value> {
    let f = FourierSpec::from_json(&read(path)?)?;
    let r = torus_reconstruct(&f, band_cap)?;
    Ok(serde_json::to_value(r).expect("result serializes"))
}
