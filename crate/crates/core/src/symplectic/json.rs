use serde::{Deserialize, Serialize};

use super::matrix::IntegerMatrix;
use super::modular::ModularMatrix;
use crate::error::{Error, Result};

/// Matrix JSON: `{ "dim": N, "mod": m | null, "rows": [[...], ...] }`.
///
/// Integer matrices write entries as decimal strings; modular ones as numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    #[serde(rename = "mod")]
    pub modulus: Option<u64>,
    pub rows: Vec<Vec<JsonEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonEntry {
    Num(i64),
    Str(String),
}

impl From<&IntegerMatrix> for MatrixJson {
    fn from(a: &IntegerMatrix) -> Self {
        MatrixJson {
            dim: a.dim(),
            modulus: None,
            rows: a
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|x| JsonEntry::Str(x.to_string())).collect())
                .collect(),
        }
    }
}

impl From<&ModularMatrix> for MatrixJson {
    fn from(a: &ModularMatrix) -> Self {
        MatrixJson {
            dim: a.dim(),
            modulus: Some(a.modulus()),
            rows: a
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|x| JsonEntry::Num(x as i64)).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    fn integer_rows(&self) -> Result<Vec<Vec<num_bigint::BigInt>>> {
        if self.rows.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: self.rows.len() });
        }
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        JsonEntry::Num(x) => Ok((*x).into()),
                        JsonEntry::Str(s) => {
                            s.parse().map_err(|_| Error::Parse(format!("bad entry {s:?}")))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_integer(&self) -> Result<IntegerMatrix> {
        IntegerMatrix::from_rows(&self.integer_rows()?)
    }

    pub fn to_modular(&self) -> Result<ModularMatrix> {
        let m = self.modulus.ok_or_else(|| Error::Parse("matrix has no modulus".into()))?;
        ModularMatrix::from_integer(&self.to_integer()?, m)
    }
}
