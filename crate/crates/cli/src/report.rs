//! Machine-readable verdicts. Witness coordinates are always `"a/b"`
//! strings, integers included (`"4/1"`).

use serde_json::{json, Map, Value};

use starfan::arith::Rational;
use starfan::bosio::ImbWitness;
use starfan::gale::{DualityPart, DualityViolation};
use starfan::complexes::{MinimalityDefect, PseudomanifoldDefect, SubstituteViolation};
use starfan::geometry::{SepWitness, WeakStarDefect};
use starfan::{Check, VertexSet};

use crate::document::index_set;

pub fn exact(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn exact_vec(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(exact).collect())
}

fn set(s: &VertexSet) -> Value {
    index_set(s)
}

fn sets(s: &[VertexSet]) -> Value {
    Value::Array(s.iter().map(set).collect())
}

/// Witness of a failed predicate, as JSON.
pub trait Witness {
    fn to_json(&self) -> Value;
}

impl Witness for VertexSet {
    fn to_json(&self) -> Value {
        set(self)
    }
}

impl Witness for SubstituteViolation {
    fn to_json(&self) -> Value {
        json!({
            "member": set(&self.member),
            "k": self.k,
            "substitutes": self.substitutes,
        })
    }
}

impl Witness for MinimalityDefect {
    fn to_json(&self) -> Value {
        match self {
            MinimalityDefect::NotSeu(v) => json!({ "not_seu": v.to_json() }),
            MinimalityDefect::Disconnected { components } => json!({
                "disconnected": components.iter().map(|c| sets(c)).collect::<Vec<_>>()
            }),
        }
    }
}

impl Witness for PseudomanifoldDefect {
    fn to_json(&self) -> Value {
        match self {
            PseudomanifoldDefect::RidgeCount { ridge, facets } => json!({
                "ridge": set(ridge),
                "facets": sets(facets),
            }),
            PseudomanifoldDefect::Disconnected { components } => json!({
                "disconnected": components.iter().map(|c| sets(c)).collect::<Vec<_>>()
            }),
        }
    }
}

impl Witness for SepWitness {
    fn to_json(&self) -> Value {
        json!({
            "first": set(&self.first),
            "second": set(&self.second),
            "point": exact_vec(&self.point),
        })
    }
}

impl Witness for ImbWitness {
    fn to_json(&self) -> Value {
        json!({
            "first": set(&self.first),
            "second": set(&self.second),
            "separator": exact_vec(&self.separator),
        })
    }
}

impl Witness for (VertexSet, VertexSet) {
    fn to_json(&self) -> Value {
        json!({ "first": set(&self.0), "second": set(&self.1) })
    }
}

impl Witness for WeakStarDefect {
    fn to_json(&self) -> Value {
        match self {
            WeakStarDefect::NotSimplicial(f) => json!({ "not_simplicial": set(f) }),
            WeakStarDefect::Overlap(w) => json!({ "overlap": w.to_json() }),
        }
    }
}

impl Witness for starfan::geometry::StarshapeDefect {
    fn to_json(&self) -> Value {
        match self {
            starfan::geometry::StarshapeDefect::Weak(w) => w.to_json(),
            starfan::geometry::StarshapeDefect::NotPseudomanifold(p) => {
                json!({ "not_pseudomanifold": p.to_json() })
            }
        }
    }
}

impl Witness for DualityViolation {
    fn to_json(&self) -> Value {
        let part = match self.part {
            DualityPart::IndependenceSpanning => "independence_spanning",
            DualityPart::BasisBasis => "basis_basis",
        };
        json!({ "subset": self.subset, "part": part })
    }
}

impl Witness for String {
    fn to_json(&self) -> Value {
        Value::String(self.clone())
    }
}

/// Verdicts in insertion order plus the theorem-level comparisons.
#[derive(Default)]
pub struct Report {
    verdicts: Vec<(String, bool, Value)>,
    theorem_checks: Vec<Value>,
    violations: Vec<String>,
    extra: Map<String, Value>,
}

impl Report {
    pub fn verdict<W: Witness>(&mut self, name: &str, check: &Check<W>) {
        let witness = check.witness().map_or(Value::Null, Witness::to_json);
        self.verdicts.retain(|(n, _, _)| n != name);
        self.verdicts.push((name.to_string(), check.holds(), witness));
    }

    /// Records that `left` and `right` must agree; a disagreement counts as
    /// a false verdict.
    pub fn theorem(&mut self, name: &str, left: (&str, bool), right: (&str, bool)) {
        self.theorem_checks.push(json!({
            "name": name,
            "left": { "label": left.0, "value": left.1 },
            "right": { "label": right.0, "value": right.1 },
            "agree": left.1 == right.1,
        }));
    }

    /// A cross-check that failed inside the library.
    pub fn violation(&mut self, message: String) {
        self.violations.push(message);
    }

    pub fn extra(&mut self, key: &str, value: Value) {
        self.extra.insert(key.to_string(), value);
    }

    pub fn all_true(&self) -> bool {
        self.verdicts.iter().all(|(_, v, _)| *v)
            && self
                .theorem_checks
                .iter()
                .all(|t| t["agree"].as_bool() == Some(true))
            && self.violations.is_empty()
    }

    pub fn to_json(&self, command: &str, kind: &str) -> Value {
        let mut verdicts = Map::new();
        for (name, value, witness) in &self.verdicts {
            verdicts.insert(name.clone(), json!({ "value": value, "witness": witness }));
        }
        let mut obj = self.extra.clone();
        obj.insert("command".into(), Value::from(command));
        obj.insert("kind".into(), Value::from(kind));
        obj.insert("verdicts".into(), Value::Object(verdicts));
        obj.insert("theorem_checks".into(), Value::Array(self.theorem_checks.clone()));
        if !self.violations.is_empty() {
            obj.insert("theorem_violations".into(), json!(self.violations));
        }
        Value::Object(obj)
    }
}
