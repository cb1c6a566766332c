//! Output payloads and their JSON and CSV encodings.
//!
//! A CSV header cell is `name:type`; matrices are written in long form with
//! the header `row:label,col:label,entry:<type>`, one line per ordered pair.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use klcat::poly::{IntPoly, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellType {
    Label,
    Text,
    Int,
    Bool,
    Poly,
    Laurent,
    Json,
}

impl CellType {
    fn name(self) -> &'static str {
        match self {
            CellType::Label => "label",
            CellType::Text => "text",
            CellType::Int => "int",
            CellType::Bool => "bool",
            CellType::Poly => "poly",
            CellType::Laurent => "laurent",
            CellType::Json => "json",
        }
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "label" => CellType::Label,
            "text" => CellType::Text,
            "int" => CellType::Int,
            "bool" => CellType::Bool,
            "poly" => CellType::Poly,
            "laurent" => CellType::Laurent,
            "json" => CellType::Json,
            other => return Err(format!("unknown column type {other:?}")),
        })
    }
}

pub fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

pub fn poly_value(p: &IntPoly) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

pub fn laurent_value(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// Square table indexed by `labels` on both sides.
    Matrix {
        entry: CellType,
        labels: Vec<String>,
        entries: Vec<Vec<Value>>,
    },
    Records {
        columns: Vec<(String, CellType)>,
        rows: Vec<Vec<Value>>,
    },
}

impl Payload {
    pub fn to_json(&self) -> Value {
        match self {
            Payload::Matrix {
                entry,
                labels,
                entries,
            } => json!({
                "kind": "matrix",
                "entryType": entry.name(),
                "labels": labels,
                "entries": entries,
            }),
            Payload::Records { columns, rows } => json!({
                "kind": "records",
                "columns": columns
                    .iter()
                    .map(|(n, t)| json!({"name": n, "type": t.name()}))
                    .collect::<Vec<_>>(),
                "rows": rows,
            }),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        match self {
            Payload::Matrix {
                entry,
                labels,
                entries,
            } => {
                w.write_record(["row:label", "col:label", &format!("entry:{entry}")])
                    .expect("in-memory write");
                for (x, row) in entries.iter().enumerate() {
                    for (y, v) in row.iter().enumerate() {
                        w.write_record([labels[x].clone(), labels[y].clone(), encode_cell(*entry, v)])
                            .expect("in-memory write");
                    }
                }
            }
            Payload::Records { columns, rows } => {
                w.write_record(columns.iter().map(|(n, t)| format!("{n}:{t}")))
                    .expect("in-memory write");
                for row in rows {
                    w.write_record(columns.iter().zip(row).map(|((_, t), v)| encode_cell(*t, v)))
                        .expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV output is UTF-8")
    }

    pub fn from_csv(text: &str) -> Result<Self, String> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
        let header: Vec<(String, CellType)> = r
            .headers()
            .map_err(|e| e.to_string())?
            .iter()
            .map(|h| {
                let (n, t) = h.rsplit_once(':').ok_or_else(|| format!("header cell {h:?} has no type"))?;
                Ok((n.to_string(), t.parse()?))
            })
            .collect::<Result<_, String>>()?;
        let records: Vec<csv::StringRecord> = r.records().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let is_matrix = header.len() == 3
            && header[0] == ("row".to_string(), CellType::Label)
            && header[1] == ("col".to_string(), CellType::Label)
            && header[2].0 == "entry";
        if is_matrix {
            let entry = header[2].1;
            let mut labels: Vec<String> = Vec::new();
            for rec in &records {
                if !labels.iter().any(|l| l == &rec[0]) {
                    labels.push(rec[0].to_string());
                }
            }
            let n = labels.len();
            if records.len() != n * n {
                return Err(format!("expected {} matrix cells, found {}", n * n, records.len()));
            }
            let mut entries = vec![vec![Value::Null; n]; n];
            for (k, rec) in records.iter().enumerate() {
                let (x, y) = (k / n, k % n);
                if rec[0] != labels[x] || rec[1] != labels[y] {
                    return Err(format!("matrix cell {k} is out of order"));
                }
                entries[x][y] = decode_cell(entry, &rec[2])?;
            }
            Ok(Payload::Matrix {
                entry,
                labels,
                entries,
            })
        } else {
            let rows = records
                .iter()
                .map(|rec| {
                    if rec.len() != header.len() {
                        return Err("ragged CSV row".to_string());
                    }
                    header
                        .iter()
                        .zip(rec.iter())
                        .map(|((_, t), c)| decode_cell(*t, c))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?;
            Ok(Payload::Records { columns: header, rows })
        }
    }
}

fn encode_cell(t: CellType, v: &Value) -> String {
    match (t, v) {
        (CellType::Label | CellType::Text, Value::String(s)) => s.clone(),
        (CellType::Int, Value::String(s)) => s.clone(),
        (CellType::Int | CellType::Bool, v) => v.to_string(),
        (CellType::Poly, v) => v["coeffs"].to_string(),
        (_, v) => v.to_string(),
    }
}

fn decode_cell(t: CellType, s: &str) -> Result<Value, String> {
    let bad = |e: &dyn fmt::Display| format!("bad {t} cell {s:?}: {e}");
    Ok(match t {
        CellType::Label | CellType::Text => Value::String(s.to_string()),
        CellType::Int => int_value(&s.parse::<BigInt>().map_err(|e| bad(&e))?),
        CellType::Bool => Value::Bool(s.parse().map_err(|e| bad(&e))?),
        CellType::Poly => {
            let coeffs: Value = serde_json::from_str(s).map_err(|e| bad(&e))?;
            let mut m = Map::new();
            m.insert("coeffs".into(), coeffs);
            Value::Object(m)
        }
        CellType::Laurent | CellType::Json => serde_json::from_str(s).map_err(|e| bad(&e))?,
    })
}
