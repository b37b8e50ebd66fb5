//! JSON formats for algebras, modules, counits and derived-functor results.
//!
//! Scalars travel as strings (`"3/2"`, `"-1"`, residues for GF(p)) so that
//! values survive the round trip exactly.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::modules::{ModuleRep, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldJson {
    Q,
    Fp(u32),
}

impl From<Field> for FieldJson {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldJson::Q,
            Field::Prime(p) => FieldJson::Fp(p),
        }
    }
}

impl TryFrom<FieldJson> for Field {
    type Error = Error;

    fn try_from(f: FieldJson) -> Result<Field> {
        match f {
            FieldJson::Q => Ok(Field::Rational),
            FieldJson::Fp(p) => Field::prime(p as u64),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub structure: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideJson {
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub side: SideJson,
    pub dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounitJson {
    pub counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedJson {
    pub functor: String,
    pub dims: Vec<usize>,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn scalars(field: Field, v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| field.parse_scalar(s)).collect()
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

pub fn matrix_from_strings(field: Field, rows: &[Vec<String>], cols: usize) -> Result<Matrix> {
    let parsed = rows.iter().map(|r| scalars(field, r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, &parsed)
}

impl AlgebraJson {
    pub fn from_algebra(alg: &AlgebraPresentation) -> Self {
        AlgebraJson {
            field: alg.field().into(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            unit: strings(alg.unit()),
            structure: alg
                .structure_triples()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
        }
    }

    /// Parses and checks the algebra axioms.
    pub fn to_algebra(&self) -> Result<AlgebraPresentation> {
        let field = Field::try_from(self.field)?;
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!("dim is {} but {} basis names given", self.dim, self.basis.len())));
        }
        let structure = self
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, field.parse_scalar(c)?)))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(field, self.basis.clone(), &structure, scalars(field, &self.unit)?)
    }
}

impl ModuleJson {
    pub fn from_module(rep: &ModuleRep) -> Self {
        ModuleJson {
            side: match rep.side() {
                Side::Right => SideJson::Right,
                Side::Left => SideJson::Left,
            },
            dim: rep.dim(),
            action: rep.action().iter().map(matrix_to_strings).collect(),
        }
    }

    /// Parses the action matrices; the field comes from the algebra.
    pub fn to_module(&self, field: Field) -> Result<ModuleRep> {
        let side = match self.side {
            SideJson::Right => Side::Right,
            SideJson::Left => Side::Left,
        };
        let action = self
            .action
            .iter()
            .map(|m| {
                if m.len() != self.dim {
                    return Err(Error::Parse(format!("action matrix has {} rows, expected {}", m.len(), self.dim)));
                }
                matrix_from_strings(field, m, self.dim)
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleRep::new(side, field, self.dim, action)
    }
}

impl CounitJson {
    pub fn to_counit(&self, field: Field) -> Result<Vec<Scalar>> {
        scalars(field, &self.counit)
    }
}

pub fn algebra_to_json(alg: &AlgebraPresentation) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_algebra(alg)).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraPresentation> {
    let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra: {e}")))?;
    raw.to_algebra()
}

pub fn module_to_json(rep: &ModuleRep) -> String {
    serde_json::to_string_pretty(&ModuleJson::from_module(rep)).expect("serializable")
}

pub fn module_from_json(text: &str, field: Field) -> Result<ModuleRep> {
    let raw: ModuleJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("module: {e}")))?;
    raw.to_module(field)
}

pub fn counit_to_json(counit: &[Scalar], symmetric: Option<bool>) -> String {
    serde_json::to_string_pretty(&CounitJson {
        counit: strings(counit),
        symmetric,
    })
    .expect("serializable")
}

pub fn counit_from_json(text: &str, field: Field) -> Result<Vec<Scalar>> {
    let raw: CounitJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("counit: {e}")))?;
    raw.to_counit(field)
}

pub fn derived_to_json(functor: &str, dims: &[usize]) -> String {
    serde_json::to_string(&DerivedJson {
        functor: functor.to_string(),
        dims: dims.to_vec(),
    })
    .expect("serializable")
}

pub fn derived_from_json(text: &str) -> Result<DerivedJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("result: {e}")))
}

/// Vectors as coefficient strings, for reporting bases.
pub fn vectors_to_strings(vs: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| strings(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    #[test]
    fn algebra_round_trip() {
        for f in [Field::Rational, Field::Prime(3)] {
            let alg = builtin("group_sym3", None, f).unwrap();
            assert_eq!(algebra_from_json(&algebra_to_json(&alg)).unwrap(), alg);
        }
    }

    #[test]
    fn field_encoding() {
        let alg = builtin("exterior2", None, Field::Prime(5)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&algebra_to_json(&alg)).unwrap();
        assert_eq!(v["field"], serde_json::json!({"Fp": 5}));
        let alg = builtin("exterior2", None, Field::Rational).unwrap();
        let v: serde_json::Value = serde_json::from_str(&algebra_to_json(&alg)).unwrap();
        assert_eq!(v["field"], "Q");
        assert!(v["structure"].as_array().unwrap().contains(&serde_json::json!([1, 2, 3, "1"])));
        assert!(v["structure"].as_array().unwrap().contains(&serde_json::json!([2, 1, 3, "-1"])));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(algebra_from_json("{"), Err(Error::Parse(_))));
        let text = r#"{"field":"Q","dim":1,"basis":["1"],"unit":["1"],"structure":[[0,0,0,"2"]]}"#;
        assert!(matches!(algebra_from_json(text), Err(Error::AxiomViolation(_))));
        let text = r#"{"field":{"Fp":4},"dim":1,"basis":["1"],"unit":["1"],"structure":[[0,0,0,"1"]]}"#;
        assert!(matches!(algebra_from_json(text), Err(Error::NotPrime(4))));
    }

    #[test]
    fn module_and_result_round_trip() {
        let alg = builtin("matrix", Some(2), Field::Rational).unwrap();
        let m = ModuleRep::regular(&alg, Side::Left);
        assert_eq!(module_from_json(&module_to_json(&m), Field::Rational).unwrap(), m);
        let r = derived_from_json(&derived_to_json("ext", &[4, 0, 0])).unwrap();
        assert_eq!(r.functor, "ext");
        assert_eq!(r.dims, vec![4, 0, 0]);
        let c = Field::Rational.from_ratio(-3, 2).unwrap();
        assert_eq!(counit_from_json(&counit_to_json(std::slice::from_ref(&c), None), Field::Rational).unwrap(), vec![c]);
    }
}
