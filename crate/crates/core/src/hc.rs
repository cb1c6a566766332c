//! Sums of Kazhdan-Lusztig-Vogan data twisted by Langlands split ranks.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kl::KlTable;
use crate::poly::{IntPoly, JsonInt, LaurentPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HcError {
    #[error("invalid dataset: {0}")]
    Parse(String),
    #[error("duplicate parameter id {0:?}")]
    DuplicateParam(String),
    #[error("unknown parameter id {0:?}")]
    UnknownParam(String),
    #[error("polynomial for ({from:?}, {to:?}) given twice")]
    DuplicatePoly { from: String, to: String },
    #[error("diagonal polynomial at {id:?} is {poly}, expected 1")]
    DiagonalNotOne { id: String, poly: String },
    #[error("nonzero polynomial at ({from:?}, {to:?}) but orbit dimension {from_dim} > {to_dim}")]
    OrbitOrder {
        from: String,
        to: String,
        from_dim: usize,
        to_dim: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct KlvParam {
    pub id: String,
    pub orbit_dim: usize,
    pub dim_a: usize,
}

/// Parameters with orbit dimensions and split ranks, and the polynomials
/// `p_ij` (absent pairs are zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlvDataset {
    params: Vec<KlvParam>,
    polys: BTreeMap<(usize, usize), IntPoly>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DatasetFile {
    params: Vec<KlvParam>,
    #[serde(default)]
    polys: Vec<PolyEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyEntry {
    from: String,
    to: String,
    coeffs: Vec<JsonInt>,
}

impl KlvDataset {
    /// Validates: ids unique, every pair known and given once, `p_ii = 1`,
    /// and `p_ij != 0` only when `orbitDim(i) <= orbitDim(j)`.
    pub fn new(params: Vec<KlvParam>, polys: Vec<(String, String, IntPoly)>) -> Result<Self, HcError> {
        let mut index = HashMap::new();
        for (k, p) in params.iter().enumerate() {
            if index.insert(p.id.clone(), k).is_some() {
                return Err(HcError::DuplicateParam(p.id.clone()));
            }
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| HcError::UnknownParam(id.to_string()));
        let mut table = BTreeMap::new();
        for (from, to, poly) in polys {
            let key = (lookup(&from)?, lookup(&to)?);
            if table.contains_key(&key) {
                return Err(HcError::DuplicatePoly { from, to });
            }
            if !poly.is_zero() && params[key.0].orbit_dim > params[key.1].orbit_dim {
                return Err(HcError::OrbitOrder {
                    from_dim: params[key.0].orbit_dim,
                    to_dim: params[key.1].orbit_dim,
                    from,
                    to,
                });
            }
            table.insert(key, poly);
        }
        table.retain(|_, p| !p.is_zero());
        for (k, p) in params.iter().enumerate() {
            match table.get(&(k, k)) {
                Some(poly) if poly.is_one() => {}
                other => {
                    return Err(HcError::DiagonalNotOne {
                        id: p.id.clone(),
                        poly: other.map_or_else(|| "0".to_string(), ToString::to_string),
                    })
                }
            }
        }
        Ok(Self { params, polys: table })
    }

    pub fn from_json(text: &str) -> Result<Self, HcError> {
        let file: DatasetFile = serde_json::from_str(text).map_err(|e| HcError::Parse(e.to_string()))?;
        let polys = file
            .polys
            .into_iter()
            .map(|e| {
                let coeffs = e.coeffs.into_iter().map(|c| c.0).collect();
                (e.from, e.to, IntPoly::from_coeffs(coeffs))
            })
            .collect();
        Self::new(file.params, polys)
    }

    pub fn to_json(&self) -> String {
        let polys: Vec<serde_json::Value> = self
            .polys
            .iter()
            .map(|(&(i, j), p)| {
                let mut v = serde_json::to_value(p).expect("polynomial serializes");
                v["from"] = self.params[i].id.clone().into();
                v["to"] = self.params[j].id.clone().into();
                v
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({ "params": self.params, "polys": polys }))
            .expect("dataset serializes")
    }

    /// Category-O data of a Weyl group: orbit dimension = length, split rank 0,
    /// polynomials = Kazhdan-Lusztig polynomials.
    pub fn from_kl_table(kl: &KlTable) -> Self {
        let el = kl.elements();
        let params = (0..el.len())
            .map(|x| KlvParam {
                id: element_id(&el.word(x).to_string()),
                orbit_dim: el.length(x),
                dim_a: 0,
            })
            .collect();
        let mut polys = BTreeMap::new();
        for y in 0..el.len() {
            for x in 0..el.len() {
                let p = kl.p(x, y);
                if !p.is_zero() {
                    polys.insert((x, y), p.clone());
                }
            }
        }
        Self { params, polys }
    }

    pub fn params(&self) -> &[KlvParam] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.params.iter().position(|p| p.id == id)
    }

    pub fn poly(&self, i: usize, j: usize) -> IntPoly {
        self.polys.get(&(i, j)).cloned().unwrap_or_else(IntPoly::zero)
    }

    /// `t^(l(j) - l(i)) p_ij(t^-2)`.
    pub fn a_tilde(&self, i: usize, j: usize) -> LaurentPoly {
        let Some(p) = self.polys.get(&(i, j)) else {
            return LaurentPoly::zero();
        };
        let gap = self.params[j].orbit_dim as i64 - self.params[i].orbit_dim as i64;
        p.to_laurent().substitute_power(-2).shift(gap)
    }

    /// `(1 - t^2)^dimA(k)`.
    pub fn d_tilde(&self, k: usize) -> IntPoly {
        let base = IntPoly::from_i64s(&[1, 0, -1]);
        (0..self.params[k].dim_a).fold(IntPoly::one(), |acc, _| &acc * &base)
    }

    /// `sum_k d_k a_ki a_kj` for every pair, with warnings for entries that
    /// cannot be Poincare series.
    pub fn conjecture_5_prime(&self) -> FivePrimeTable {
        let n = self.len();
        let a: Vec<Vec<LaurentPoly>> = (0..n).map(|k| (0..n).map(|i| self.a_tilde(k, i)).collect()).collect();
        let d: Vec<LaurentPoly> = (0..n).map(|k| self.d_tilde(k).to_laurent()).collect();
        let mut entries = vec![vec![LaurentPoly::zero(); n]; n];
        let mut warnings = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    if a[k][i].is_zero() || a[k][j].is_zero() {
                        continue;
                    }
                    acc += &(&d[k] * &(&a[k][i] * &a[k][j]));
                }
                let (pi, pj) = (&self.params[i].id, &self.params[j].id);
                if acc.has_negative_coeff() {
                    warnings.push(format!("entry ({pi}, {pj}) = {acc} has a negative coefficient"));
                }
                if acc.has_negative_exponent() {
                    warnings.push(format!("entry ({pi}, {pj}) = {acc} has a negative exponent"));
                }
                entries[i][j] = acc;
            }
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| entries[i][j] == entries[j][i]));
        let diagonal = (0..n)
            .map(|i| {
                let premise = (0..n).all(|k| {
                    k == i || a[k][i].is_zero() || a[k][i].min_deg() > 0
                });
                DiagonalCheck {
                    id: self.params[i].id.clone(),
                    premise,
                    constant_term_one: entries[i][i].coeff(0) == BigInt::from(1),
                }
            })
            .collect();
        FivePrimeTable {
            labels: self.params.iter().map(|p| p.id.clone()).collect(),
            entries,
            warnings,
            symmetric,
            diagonal,
        }
    }
}

fn element_id(word: &str) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.to_string()
    }
}

/// Whether the constant term of a diagonal entry is 1, together with whether
/// every other contributing `a_ki` has only positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagonalCheck {
    pub id: String,
    pub premise: bool,
    pub constant_term_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FivePrimeTable {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
    pub warnings: Vec<String>,
    pub symmetric: bool,
    pub diagonal: Vec<DiagonalCheck>,
}

impl FivePrimeTable {
    pub fn get(&self, i: &str, j: &str) -> Option<&LaurentPoly> {
        let i = self.labels.iter().position(|l| l == i)?;
        let j = self.labels.iter().position(|l| l == j)?;
        Some(&self.entries[i][j])
    }
}

pub const SL2R_JSON: &str = r#"{
  "params": [
    {"id": "ds+", "orbitDim": 0, "dimA": 0},
    {"id": "ds-", "orbitDim": 0, "dimA": 0},
    {"id": "ps", "orbitDim": 1, "dimA": 1}
  ],
  "polys": [
    {"from": "ds+", "to": "ds+", "coeffs": [1]},
    {"from": "ds-", "to": "ds-", "coeffs": [1]},
    {"from": "ps", "to": "ps", "coeffs": [1]},
    {"from": "ds+", "to": "ps", "coeffs": [1]},
    {"from": "ds-", "to": "ps", "coeffs": [1]}
  ]
}
"#;
