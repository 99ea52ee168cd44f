use std::fmt;

use serde_json::{json, Value as Json};

use crate::grossnum::{GrossNumber, NumberClass, Parity};
use crate::paradoxes::ParadoxReport;
use crate::series::RamanujanAudit;
use crate::setalgebra::{GrossSet, RootCount};

/// Result of evaluating one expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Number(GrossNumber),
    Set(GrossSet),
    Parity(Parity),
    Bool(bool),
    Report(ParadoxReport),
    RootCount(RootCount),
    Class(NumberClass),
    Audit(RamanujanAudit),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Set(_) => "set",
            Value::Parity(_) => "parity",
            Value::Bool(_) => "bool",
            Value::Report(_) => "report",
            Value::RootCount(_) => "rootcount",
            Value::Class(_) => "class",
            Value::Audit(_) => "audit",
        }
    }

    pub fn as_number(&self) -> Option<&GrossNumber> {
        match self {
            Value::Number(n) => Some(n),
            _ => None,
        }
    }

    /// `{"type": ..., "value": ...}` plus type-specific fields.
    pub fn to_json(&self) -> Json {
        let ty = self.type_name();
        match self {
            Value::Number(n) => json!({ "type": ty, "value": n.to_string() }),
            Value::Set(s) => json!({
                "type": ty,
                "value": s.to_string(),
                "cardinality": s.cardinality().to_string(),
            }),
            Value::Parity(p) => json!({ "type": ty, "value": p.to_string() }),
            Value::Bool(b) => json!({ "type": ty, "value": b }),
            Value::Report(r) => {
                let mut v = r.to_json();
                v["type"] = json!(ty);
                v
            }
            Value::RootCount(r) => json!({
                "type": ty,
                "value": r.to_string(),
                "upper": r.upper_value().to_string(),
            }),
            Value::Class(c) => json!({ "type": ty, "value": c.name() }),
            Value::Audit(a) => {
                let mut v = serde_json::to_value(a).expect("audit serializes");
                v["type"] = json!(ty);
                v
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(n) => write!(f, "{n}"),
            Value::Set(s) => write!(f, "{s}"),
            Value::Parity(p) => write!(f, "{p}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Report(r) => write!(f, "{r}"),
            Value::RootCount(r) => write!(f, "{r}"),
            Value::Class(c) => f.write_str(c.name()),
            Value::Audit(a) => write!(f, "lhs = {}; rhs = {}; consistent = {}", a.lhs, a.rhs, a.consistent),
        }
    }
}

/// Deterministic text form of a value.
pub fn print_value(v: &Value) -> String {
    v.to_string()
}
