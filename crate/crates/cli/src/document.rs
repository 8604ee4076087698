//! The JSON input format.
//!
//! ```json
//! {"kind": "realization", "n": 4, "facets": [[1, 2], [2, 3]],
//!  "points": [[1, 0], ["1/2", "0.25"]], "base_point": [0, 0]}
//! ```
//!
//! Kinds are `realization`, `complex`, `fundamental_set` (`M`, `n`,
//! `members`), `studiable_system` (`M`, `n`, `members`, `lambda`) and
//! `configuration` (`dim`, `points`). Numbers may be JSON integers, JSON
//! decimals, `"a/b"` strings or decimal strings; all are read exactly.
//!
//! Serialization is canonical: keys sorted, integers as JSON integers, other
//! rationals as `"a/b"` strings, two-space indentation, trailing newline.

use serde_json::{Map, Number, Value};
use thiserror::Error;

use starfan::arith::{format_rational, parse_rational, Rational};
use starfan::{
    FundamentalSet, Realization, SimplicialComplex, StudiableSystem, VectorConfiguration,
};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Schema(String),
    #[error(transparent)]
    Model(#[from] starfan::Error),
}

type Result<T> = std::result::Result<T, DocumentError>;

fn schema<T>(msg: impl Into<String>) -> Result<T> {
    Err(DocumentError::Schema(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Realization(Realization),
    Complex(SimplicialComplex),
    FundamentalSet(FundamentalSet),
    StudiableSystem(StudiableSystem),
    Configuration(VectorConfiguration),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Realization(_) => "realization",
            Document::Complex(_) => "complex",
            Document::FundamentalSet(_) => "fundamental_set",
            Document::StudiableSystem(_) => "studiable_system",
            Document::Configuration(_) => "configuration",
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| DocumentError::Schema("top level must be an object".into()))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| DocumentError::Schema("missing string field \"kind\"".into()))?;
    Ok(match kind {
        "realization" => {
            let n = usize_field(obj, "n")?;
            let complex = SimplicialComplex::closure(index_sets(obj, "facets")?, n)?;
            let points = rational_rows(field(obj, "points")?, "points")?;
            let base = match obj.get("base_point") {
                None | Some(Value::Null) => None,
                Some(v) => Some(rational_row(v, "base_point")?),
            };
            Document::Realization(Realization::new(complex, points, base)?)
        }
        "complex" => {
            let n = usize_field(obj, "n")?;
            Document::Complex(SimplicialComplex::closure(index_sets(obj, "facets")?, n)?)
        }
        "fundamental_set" => Document::FundamentalSet(fundamental_set(obj)?),
        "studiable_system" => {
            let fs = fundamental_set(obj)?;
            let lambda = rational_rows(field(obj, "lambda")?, "lambda")?;
            Document::StudiableSystem(StudiableSystem::new(fs, lambda)?)
        }
        "configuration" => {
            let dim = usize_field(obj, "dim")?;
            let points = rational_rows(field(obj, "points")?, "points")?;
            Document::Configuration(VectorConfiguration::new(dim, points)?)
        }
        other => return schema(format!("unknown kind \"{other}\"")),
    })
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| DocumentError::Schema(format!("missing field \"{name}\"")))
}

fn usize_field(obj: &Map<String, Value>, name: &str) -> Result<usize> {
    as_usize(field(obj, name)?, name)
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| DocumentError::Schema(format!("\"{what}\" must be a nonnegative integer")))
}

fn index_sets(obj: &Map<String, Value>, name: &str) -> Result<Vec<Vec<usize>>> {
    let rows = field(obj, name)?
        .as_array()
        .ok_or_else(|| DocumentError::Schema(format!("\"{name}\" must be an array")))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| DocumentError::Schema(format!("entries of \"{name}\" must be arrays")))?
                .iter()
                .map(|v| as_usize(v, name))
                .collect()
        })
        .collect()
}

fn fundamental_set(obj: &Map<String, Value>) -> Result<FundamentalSet> {
    let m = usize_field(obj, "M")?;
    let n = usize_field(obj, "n")?;
    Ok(FundamentalSet::new(m, n, index_sets(obj, "members")?)?)
}

/// Reads a number exactly. With `arbitrary_precision` a JSON number keeps
/// its source text.
pub fn rational_value(v: &Value) -> Result<Rational> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return schema(format!("expected a number, got {other}")),
    };
    Ok(parse_rational(&text)?)
}

fn rational_row(v: &Value, what: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| DocumentError::Schema(format!("\"{what}\" entries must be arrays")))?
        .iter()
        .map(rational_value)
        .collect()
}

fn rational_rows(v: &Value, what: &str) -> Result<Vec<Vec<Rational>>> {
    v.as_array()
        .ok_or_else(|| DocumentError::Schema(format!("\"{what}\" must be an array")))?
        .iter()
        .map(|row| rational_row(row, what))
        .collect()
}

/// Integers as JSON integers, anything else as an `"a/b"` string.
pub fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        Value::Number(
            r.to_integer()
                .to_string()
                .parse::<Number>()
                .expect("integer literal"),
        )
    } else {
        Value::String(format_rational(r))
    }
}

pub fn rational_array(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn rational_matrix(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| rational_array(r)).collect())
}

pub fn index_set<'a>(s: impl IntoIterator<Item = &'a usize>) -> Value {
    Value::Array(s.into_iter().map(|&v| Value::from(v)).collect())
}

pub fn document_json(doc: &Document) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::from(doc.kind()));
    match doc {
        Document::Realization(r) => {
            obj.insert("n".into(), Value::from(r.complex().n()));
            obj.insert("facets".into(), sets(r.complex().facets()));
            obj.insert("points".into(), rational_matrix(r.points()));
            obj.insert("base_point".into(), rational_array(r.base_point()));
        }
        Document::Complex(c) => {
            obj.insert("n".into(), Value::from(c.n()));
            obj.insert("facets".into(), sets(c.facets()));
        }
        Document::FundamentalSet(fs) => insert_fundamental(&mut obj, fs),
        Document::StudiableSystem(s) => {
            insert_fundamental(&mut obj, s.fundamental_set());
            obj.insert("lambda".into(), rational_matrix(s.lambda()));
        }
        Document::Configuration(x) => {
            obj.insert("dim".into(), Value::from(x.dim()));
            obj.insert("points".into(), rational_matrix(x.points()));
        }
    }
    Value::Object(obj)
}

fn insert_fundamental(obj: &mut Map<String, Value>, fs: &FundamentalSet) {
    obj.insert("M".into(), Value::from(fs.m()));
    obj.insert("n".into(), Value::from(fs.n()));
    obj.insert("members".into(), sets(fs.members()));
}

fn sets(s: &[starfan::VertexSet]) -> Value {
    Value::Array(s.iter().map(index_set).collect())
}

/// Pretty JSON with a trailing newline.
pub fn to_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn serialize(doc: &Document) -> String {
    to_text(&document_json(doc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use starfan::arith::ratio;

    #[test]
    fn numbers_are_read_exactly() {
        let v: Value = serde_json::from_str(r#"[1, -2.5, "3/4", "0.1", 1e-3, 123456789012345678901234567890]"#).unwrap();
        let got: Vec<Rational> = v.as_array().unwrap().iter().map(|x| rational_value(x).unwrap()).collect();
        assert_eq!(got[0], ratio(1, 1));
        assert_eq!(got[1], ratio(-5, 2));
        assert_eq!(got[2], ratio(3, 4));
        assert_eq!(got[3], ratio(1, 10));
        assert_eq!(got[4], ratio(1, 1000));
        assert_eq!(got[5].to_integer().to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn canonical_round_trip() {
        let text = "{\n  \"base_point\": [\n    0,\n    0\n  ],\n  \"facets\": [\n    [\n      1,\n      2\n    ]\n  ],\n  \"kind\": \"realization\",\n  \"n\": 2,\n  \"points\": [\n    [\n      \"1/2\",\n      0\n    ],\n    [\n      0,\n      1\n    ]\n  ]\n}\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(serialize(&doc), text);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(parse_document("[1]"), Err(DocumentError::Schema(_))));
        assert!(matches!(parse_document("{\"kind\": \"torus\"}"), Err(DocumentError::Schema(_))));
        assert!(matches!(parse_document("{"), Err(DocumentError::Json(_))));
        assert!(matches!(
            parse_document(r#"{"kind": "complex", "n": 2, "facets": [[1, 3]]}"#),
            Err(DocumentError::Model(_))
        ));
        assert!(matches!(
            parse_document(r#"{"kind": "configuration", "dim": 2, "points": [[1, true]]}"#),
            Err(DocumentError::Schema(_))
        ));
    }

    #[test]
    fn every_kind_round_trips() {
        let docs = [
            r#"{"kind": "complex", "n": 3, "facets": [[2, 3], [1, 2]]}"#,
            r#"{"kind": "fundamental_set", "M": 1, "n": 2, "members": [[2], [1]]}"#,
            r#"{"kind": "studiable_system", "M": 1, "n": 2, "members": [[1], [2]], "lambda": [[1], ["-0.5"]]}"#,
            r#"{"kind": "configuration", "dim": 2, "points": [[1, 0], [0, 1], [-1, -1]]}"#,
        ];
        for text in docs {
            let doc = parse_document(text).unwrap();
            let canonical = serialize(&doc);
            assert_eq!(parse_document(&canonical).unwrap(), doc);
            assert_eq!(serialize(&parse_document(&canonical).unwrap()), canonical);
        }
    }
}
