//! Quivers with length-homogeneous relations, and their JSON form.
//!
//! Paths are arrow sequences in traversal order: `[b, a]` walks `b` first.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::linalg::Q;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// One term `coeff * path` of a relation; `path` holds arrow indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: Q,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

/// A validated presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
}

impl AlgebraPresentation {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
        relations: Vec<Vec<(Q, Vec<String>)>>,
    ) -> Result<Self, AlgebraError> {
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(AlgebraError::Presentation(format!("duplicate vertex {v:?}")));
            }
        }
        let vertex = |name: &str| {
            vindex
                .get(name)
                .copied()
                .ok_or_else(|| AlgebraError::Presentation(format!("unknown vertex {name:?}")))
        };
        let mut aindex = HashMap::new();
        let mut arrow_list = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            if aindex.insert(name.clone(), arrow_list.len()).is_some() {
                return Err(AlgebraError::Presentation(format!("duplicate arrow {name:?}")));
            }
            arrow_list.push(Arrow {
                from: vertex(&from)?,
                to: vertex(&to)?,
                name,
            });
        }
        let mut rels = Vec::with_capacity(relations.len());
        for (k, rel) in relations.into_iter().enumerate() {
            let mut terms = Vec::new();
            let mut shape: Option<(usize, usize, usize)> = None;
            for (coeff, path) in rel {
                if path.is_empty() {
                    return Err(AlgebraError::Presentation(format!(
                        "relation {k} has a term with an empty path"
                    )));
                }
                let path: Vec<usize> = path
                    .iter()
                    .map(|a| {
                        aindex.get(a).copied().ok_or_else(|| {
                            AlgebraError::Presentation(format!("unknown arrow {a:?} in relation {k}"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                for w in path.windows(2) {
                    if arrow_list[w[0]].to != arrow_list[w[1]].from {
                        return Err(AlgebraError::Presentation(format!(
                            "arrows {:?} and {:?} do not compose in relation {k}",
                            arrow_list[w[0]].name, arrow_list[w[1]].name
                        )));
                    }
                }
                let this = (
                    arrow_list[path[0]].from,
                    arrow_list[*path.last().unwrap()].to,
                    path.len(),
                );
                match shape {
                    None => shape = Some(this),
                    Some(s) if s != this => return Err(AlgebraError::NonHomogeneous(k)),
                    _ => {}
                }
                if !coeff.is_zero() {
                    terms.push(RelationTerm { coeff, path });
                }
            }
            let Some((source, target, degree)) = shape else {
                return Err(AlgebraError::Presentation(format!("relation {k} is empty")));
            };
            rels.push(Relation {
                terms,
                source,
                target,
                degree,
            });
        }
        Ok(Self {
            vertices,
            arrows: arrow_list,
            relations: rels,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| AlgebraError::Presentation(e.to_string()))?;
        file.into_presentation()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationFile::from(self)).expect("presentation serializes")
    }

    /// Principal block of category O for sl2: vertices `e`, `s`, arrows
    /// `a: e -> s`, `b: s -> e`, and the loop at `s` set to zero.
    pub fn sl2() -> Self {
        Self::from_json(SL2_JSON).expect("embedded preset is valid")
    }

    /// One vertex, one loop `x`, relation `x^2 = 0`: infinite global dimension.
    pub fn dual_numbers() -> Self {
        Self::from_json(DUAL_NUMBERS_JSON).expect("embedded preset is valid")
    }

    /// `n` vertices, no arrows.
    pub fn semisimple(n: usize) -> Self {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), vec![], vec![])
            .expect("semisimple presentation is valid")
    }
}

pub const SL2_JSON: &str = r#"{
  "vertices": ["e", "s"],
  "arrows": [
    {"name": "a", "from": "e", "to": "s"},
    {"name": "b", "from": "s", "to": "e"}
  ],
  "relations": [
    [{"coeff": "1", "path": ["b", "a"]}]
  ]
}
"#;

pub const DUAL_NUMBERS_JSON: &str = r#"{
  "vertices": ["o"],
  "arrows": [{"name": "x", "from": "o", "to": "o"}],
  "relations": [[{"coeff": "1", "path": ["x", "x"]}]]
}
"#;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowFile>,
    #[serde(default)]
    relations: Vec<Vec<TermFile>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowFile {
    name: String,
    from: String,
    to: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    coeff: Coeff,
    path: Vec<String>,
}

/// A rational written as a decimal string (`"3/2"`, `"-1"`) or a JSON integer.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn parse(&self) -> Result<Q, AlgebraError> {
        match self {
            Coeff::Int(v) => Ok(Q::from_integer(BigInt::from(*v))),
            Coeff::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Q, AlgebraError> {
    let bad = || AlgebraError::Presentation(format!("bad rational coefficient {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

impl PresentationFile {
    fn into_presentation(self) -> Result<AlgebraPresentation, AlgebraError> {
        let arrows = self
            .arrows
            .into_iter()
            .map(|a| (a.name, a.from, a.to))
            .collect();
        let relations = self
            .relations
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|t| Ok((t.coeff.parse()?, t.path)))
                    .collect::<Result<Vec<_>, AlgebraError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraPresentation::new(self.vertices, arrows, relations)
    }
}

impl From<&AlgebraPresentation> for PresentationFile {
    fn from(p: &AlgebraPresentation) -> Self {
        let name = |i: usize| p.vertices[i].clone();
        Self {
            vertices: p.vertices.clone(),
            arrows: p
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    name: a.name.clone(),
                    from: name(a.from),
                    to: name(a.to),
                })
                .collect(),
            relations: p
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|t| TermFile {
                            coeff: Coeff::Text(t.coeff.to_string()),
                            path: t.path.iter().map(|&a| p.arrows[a].name.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}
