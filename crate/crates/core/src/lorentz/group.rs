use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::element::{validate_tagged, LorentzMatrix, RotationTag};
use super::finite::{enumerate_finite, FiniteGroup, GroupGenerator};
use crate::error::{Error, Result};
use crate::exactnum::BoostScalar;
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    Finite,
    BoostCyclic,
    BlockProduct,
    LatticeTranslation,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GroupParameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boost: Option<bool>,
}

/// A group presented by generators.
///
/// Lorentz kinds (`boost-cyclic`, `block-product`) carry a signature `(n,1)`;
/// a block product lists commuting factors whose product is the single
/// generator of the group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub dim: usize,
    pub signature: Option<usize>,
    pub generators: Vec<GroupGenerator>,
    pub lattice_rank: Option<usize>,
    pub parameters: GroupParameters,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTag {
    order: u32,
    plane: [usize; 2],
}

impl RawTag {
    fn tag(&self) -> Result<RotationTag> {
        RotationTag::new(self.order, (self.plane[0], self.plane[1]))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawGenerator {
    Rotation {
        rotation: RawTag,
    },
    Matrix {
        #[serde(default)]
        signature: Option<[usize; 2]>,
        entries: Vec<Vec<BoostScalar>>,
        #[serde(default)]
        rotations: Vec<RawTag>,
    },
}

#[derive(Deserialize)]
struct RawLattice {
    rank: usize,
}

#[derive(Deserialize)]
struct RawSpec {
    kind: GroupKind,
    #[serde(default)]
    dim: Option<usize>,
    #[serde(default)]
    generators: Vec<RawGenerator>,
    #[serde(default)]
    lattice: Option<RawLattice>,
    #[serde(default)]
    parameters: GroupParameters,
}

fn parse_signature(sig: [usize; 2]) -> Result<usize> {
    match sig {
        [n, 1] if n >= 1 => Ok(n),
        _ => Err(Error::Parse(format!("signature must be [n,1] with n >= 1, got {sig:?}"))),
    }
}

/// Parse a matrix document `{"signature": [n,1], "entries": [[..]], "rotations": [..]}`.
pub fn parse_lorentz_matrix(text: &str) -> Result<LorentzMatrix> {
    let raw: RawGenerator =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    match raw {
        RawGenerator::Matrix {
            signature,
            entries,
            rotations,
        } => {
            let m = Matrix::from_rows(entries).map_err(|e| Error::Parse(e.to_string()))?;
            let n = match signature {
                Some(sig) => parse_signature(sig)?,
                None if m.nrows() >= 2 => m.nrows() - 1,
                None => return Err(Error::Parse("matrix needs a signature".into())),
            };
            let tags = rotations.iter().map(RawTag::tag).collect::<Result<Vec<_>>>()?;
            validate_tagged(&m, n, &tags)
        }
        RawGenerator::Rotation { .. } => Err(Error::Parse(
            "expected a matrix document, found a bare rotation".into(),
        )),
    }
}

/// Serialize a matrix of scalars in the document format.
pub fn matrix_to_json(m: &Matrix<BoostScalar>, signature: Option<usize>) -> Value {
    let mut obj = serde_json::Map::new();
    if let Some(n) = signature {
        obj.insert("signature".into(), serde_json::json!([n, 1]));
    }
    obj.insert(
        "entries".into(),
        serde_json::to_value(m.to_rows()).expect("scalars serialize"),
    );
    Value::Object(obj)
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("group JSON: {e}")))?;
        Self::from_value(v)
    }

    pub fn from_value(v: Value) -> Result<Self> {
        let raw: RawSpec =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("group spec: {e}")))?;
        if raw.kind == GroupKind::LatticeTranslation {
            let rank = raw
                .lattice
                .map(|l| l.rank)
                .ok_or_else(|| Error::Parse("lattice-translation needs {\"lattice\": {\"rank\": n}}".into()))?;
            if rank == 0 {
                return Err(Error::Parse("lattice rank must be positive".into()));
            }
            return Ok(Self {
                kind: raw.kind,
                dim: rank,
                signature: None,
                generators: vec![],
                lattice_rank: Some(rank),
                parameters: raw.parameters,
            });
        }
        if raw.generators.is_empty() {
            return Err(Error::Parse("group needs at least one generator".into()));
        }
        let mut signature = None;
        let mut dim = raw.dim;
        let mut max_axis = 0;
        for g in &raw.generators {
            match g {
                RawGenerator::Matrix {
                    signature: sig,
                    entries,
                    ..
                } => {
                    let d = entries.len();
                    if let Some(sig) = sig {
                        let n = parse_signature(*sig)?;
                        if n + 1 != d {
                            return Err(Error::Parse(format!("signature ({n},1) but {d} rows")));
                        }
                        if signature.is_some_and(|s| s != n) {
                            return Err(Error::Parse("generators disagree on the signature".into()));
                        }
                        signature = Some(n);
                    }
                    if dim.is_some_and(|e| e != d) {
                        return Err(Error::Parse(format!("generator has {d} rows, expected {}", dim.unwrap())));
                    }
                    dim = Some(d);
                }
                RawGenerator::Rotation { rotation } => {
                    max_axis = max_axis.max(rotation.plane[0].max(rotation.plane[1]) + 1);
                }
            }
        }
        let dim = dim.unwrap_or(max_axis);
        if dim == 0 || max_axis > dim {
            return Err(Error::Parse("rotation plane outside the representation".into()));
        }
        let generators = raw
            .generators
            .into_iter()
            .map(|g| match g {
                RawGenerator::Rotation { rotation } => Ok(GroupGenerator::rotation(dim, rotation.tag()?)),
                RawGenerator::Matrix {
                    entries, rotations, ..
                } => Ok(GroupGenerator {
                    matrix: Matrix::from_rows(entries).map_err(|e| Error::Parse(e.to_string()))?,
                    rotations: rotations.iter().map(RawTag::tag).collect::<Result<_>>()?,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        for g in &generators {
            if !g.matrix.is_square() {
                return Err(Error::Parse("generator matrix is not square".into()));
            }
        }
        let spec = Self {
            kind: raw.kind,
            dim,
            signature,
            generators,
            lattice_rank: None,
            parameters: raw.parameters,
        };
        match spec.kind {
            GroupKind::BoostCyclic | GroupKind::BlockProduct => {
                let n = spec.signature.or(if dim >= 2 { Some(dim - 1) } else { None });
                let n = n.ok_or_else(|| Error::Parse("Lorentz group needs dimension >= 2".into()))?;
                let spec = Self {
                    signature: Some(n),
                    ..spec
                };
                if spec.kind == GroupKind::BoostCyclic && spec.generators.len() != 1 {
                    return Err(Error::Parse("boost-cyclic takes exactly one generator".into()));
                }
                Ok(spec)
            }
            _ => Ok(spec),
        }
    }

    pub fn is_lorentz(&self) -> bool {
        matches!(self.kind, GroupKind::BoostCyclic | GroupKind::BlockProduct)
    }

    /// The single generator of a Lorentz kind: the product of all listed
    /// factors, validated in `O(n,1)`.
    pub fn lorentz_generator(&self) -> Result<LorentzMatrix> {
        let n = self
            .signature
            .ok_or_else(|| Error::Unsupported("group has no Lorentz signature".into()))?;
        let mut m = Matrix::<BoostScalar>::identity(self.dim);
        let mut tags = Vec::new();
        for g in &self.generators {
            m = m.mul(&g.matrix)?;
            tags.extend(g.rotations.iter().copied());
        }
        validate_tagged(&m, n, &tags)
    }

    /// Close a finite group under multiplication.
    pub fn enumerate(&self, cap: usize) -> Result<FiniteGroup> {
        if self.kind == GroupKind::LatticeTranslation {
            return Err(Error::Unsupported("translation lattices are not linear".into()));
        }
        enumerate_finite(self.dim, &self.generators, cap)
    }

    pub fn to_json(&self) -> Value {
        let kind = serde_json::to_value(self.kind).expect("enum serializes");
        let mut obj = serde_json::Map::new();
        obj.insert("kind".into(), kind);
        if let Some(rank) = self.lattice_rank {
            obj.insert("lattice".into(), serde_json::json!({ "rank": rank }));
            return Value::Object(obj);
        }
        obj.insert("dim".into(), self.dim.into());
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|g| {
                let mut v = matrix_to_json(&g.matrix, self.signature);
                if !g.rotations.is_empty() {
                    v["rotations"] = g
                        .rotations
                        .iter()
                        .map(|t| serde_json::json!({"order": t.order, "plane": [t.plane.0, t.plane.1]}))
                        .collect();
                }
                v
            })
            .collect();
        obj.insert("generators".into(), gens.into());
        if self.parameters != GroupParameters::default() {
            obj.insert(
                "parameters".into(),
                serde_json::to_value(&self.parameters).expect("parameters serialize"),
            );
        }
        Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::element::hyperbolic_rotation;

    const BOOST: &str = r#"{"kind":"boost-cyclic","generators":[
        {"signature":[1,1],"entries":[[{"2":"1/2","-2":"1/2"},{"2":"1/2","-2":"-1/2"}],
                                      [{"2":"1/2","-2":"-1/2"},{"2":"1/2","-2":"1/2"}]]}]}"#;

    #[test]
    fn boost_spec() {
        let g = GroupSpec::from_json(BOOST).unwrap();
        assert_eq!(g.kind, GroupKind::BoostCyclic);
        assert_eq!(g.dim, 2);
        assert_eq!(g.signature, Some(1));
        assert_eq!(g.lorentz_generator().unwrap().entries(), &hyperbolic_rotation(1));
        let again = GroupSpec::from_value(g.to_json()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rotation_spec() {
        let g = GroupSpec::from_json(
            r#"{"kind":"finite","generators":[{"rotation":{"order":3,"plane":[0,1]}}]}"#,
        )
        .unwrap();
        assert_eq!(g.dim, 2);
        assert_eq!(g.enumerate(100).unwrap().order(), 3);
    }

    #[test]
    fn block_product_spec() {
        let g = GroupSpec::from_json(
            r#"{"kind":"block-product","generators":[
                {"rotation":{"order":3,"plane":[0,1]}},
                {"signature":[3,1],"entries":[["1","0","0","0"],["0","1","0","0"],
                   ["0","0",{"2":"1/2","-2":"1/2"},{"2":"1/2","-2":"-1/2"}],
                   ["0","0",{"2":"1/2","-2":"-1/2"},{"2":"1/2","-2":"1/2"}]]}]}"#,
        )
        .unwrap();
        assert_eq!(g.dim, 4);
        let a = g.lorentz_generator().unwrap();
        assert_eq!(a.rotations().len(), 1);
        assert_eq!(a.n(), 3);
    }

    #[test]
    fn lattice_and_errors() {
        let g = GroupSpec::from_json(r#"{"kind":"lattice-translation","lattice":{"rank":2}}"#).unwrap();
        assert_eq!(g.lattice_rank, Some(2));
        assert!(matches!(GroupSpec::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            GroupSpec::from_json(r#"{"kind":"finite","generators":[]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            GroupSpec::from_json(r#"{"kind":"weird","generators":[]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            GroupSpec::from_json(r#"{"kind":"finite","generators":[{"signature":[2,1],"entries":[["1"]]}]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn matrix_documents() {
        let a = parse_lorentz_matrix(r#"{"signature":[1,1],"entries":[["1","0"],["0","-1"]]}"#).unwrap();
        assert_eq!(a.det_sign(), -1);
        assert!(matches!(
            parse_lorentz_matrix(r#"{"signature":[1,1],"entries":[["2","0"],["0","1/2"]]}"#),
            Err(Error::NotLorentz { .. })
        ));
        assert!(matches!(parse_lorentz_matrix("[1]"), Err(Error::Parse(_))));
    }
}
