//! Serde helpers for exact integers and matrices.
//!
//! Integers are emitted as plain JSON numbers while they fit in 64 bits and
//! as decimal strings beyond that, so nothing silently loses precision in
//! transit. Matrices serialize row-major as nested arrays.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Unexpected};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::matrix::IntMat;

/// A `BigInt` with the number-or-decimal-string JSON convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Str(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Str(s) => s
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| de::Error::invalid_value(Unexpected::Str(&s), &"decimal integer")),
        }
    }
}

/// `#[serde(with = "bigint_repr")]` for a single `BigInt` field.
pub mod bigint_repr {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        JsonInt(x.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        JsonInt::deserialize(d).map(|j| j.0)
    }
}

/// `#[serde(with = "bigint_vec_repr")]` for `Vec<BigInt>` fields.
pub mod bigint_vec_repr {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&JsonInt(x.clone()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<JsonInt>::deserialize(d).map(|v| v.into_iter().map(|j| j.0).collect())
    }
}

/// `#[serde(with = "intmat_repr")]` for `IntMat` fields (row-major).
pub mod intmat_repr {
    use super::*;

    pub fn serialize<S: Serializer>(m: &IntMat, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<JsonInt>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| JsonInt(m.at(i, j).clone())).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntMat, D::Error> {
        let rows: Vec<Vec<JsonInt>> = Vec::deserialize(d)?;
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(de::Error::custom("ragged matrix rows"));
        }
        Ok(IntMat::from_fn(r, c, |i, j| rows[i][j].0.clone()))
    }
}

/// JSON view of a lattice: `{rank, gram, labels}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    #[serde(with = "intmat_repr")]
    pub gram: IntMat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&crate::lattice::Lattice> for LatticeJson {
    fn from(l: &crate::lattice::Lattice) -> Self {
        LatticeJson {
            rank: l.rank(),
            gram: l.gram().clone(),
            labels: l.labels().map(|ls| ls.to_vec()),
        }
    }
}

/// JSON view of an isometry: the lattice data plus its matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsometryJson {
    pub rank: usize,
    #[serde(with = "intmat_repr")]
    pub gram: IntMat,
    #[serde(with = "intmat_repr")]
    pub matrix: IntMat,
}

impl From<&crate::lattice::Isometry> for IsometryJson {
    fn from(g: &crate::lattice::Isometry) -> Self {
        IsometryJson {
            rank: g.lattice().rank(),
            gram: g.lattice().gram().clone(),
            matrix: g.matrix().clone(),
        }
    }
}
