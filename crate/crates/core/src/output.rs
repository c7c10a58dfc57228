//! Deterministic JSON and CSV rendering for command output.
//!
//! Numbers are written in lowercase scientific notation with 12 significant
//! digits so that repeated runs are byte-identical.

use std::collections::BTreeMap;

use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

/// `x` with 12 significant digits, e.g. `9.27401007836e-24`.
pub fn sci(x: f64) -> String {
    // Avoid printing "-0.00000000000e0".
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Num(x) if x.is_finite() => RawValue::from_string(sci(*x))
                .map_err(serde::ser::Error::custom)?
                .serialize(serializer),
            Value::Num(_) => serializer.serialize_none(),
            Value::Bool(b) => serializer.serialize_bool(*b),
            Value::Text(s) => serializer.serialize_str(s),
        }
    }
}

/// Result of one command: its inputs, its results and the relations used to
/// compute them. Map keys are sorted; numeric keys carry a unit suffix.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub relations: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            relations: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn result(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.results.insert(key.to_owned(), value.into());
        self
    }

    pub fn relation(mut self, r: &str) -> Self {
        self.relations.push(r.to_owned());
        self
    }

    pub fn num(&self, key: &str) -> Option<f64> {
        match self.results.get(key) {
            Some(Value::Num(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match self.results.get(key) {
            Some(Value::Bool(b)) => Some(*b),
            _ => None,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope is always serializable");
        s.push('\n');
        s
    }
}

/// Comma-separated table with a header row and `\n` line endings.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
