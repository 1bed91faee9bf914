use serde_json::{json, Map, Number};

use crate::dual_number::DualNumber;
use crate::format::format_real;

/// A report field value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Dual(DualNumber),
    Bool(bool),
    Count(u64),
    Text(String),
    Matrix(Vec<Vec<f64>>),
    Object(Vec<(String, Value)>),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<DualNumber> for Value {
    fn from(v: DualNumber) -> Self {
        Value::Dual(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Count(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Count(v as u64)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

/// Output of one command: what ran, on what, and what came out.
///
/// `pass` is `None` for commands that compute without checking anything.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, Value)>,
    pub results: Vec<(String, Value)>,
    pub pass: Option<bool>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self { command: command.to_string(), inputs: Vec::new(), results: Vec::new(), pass: None }
    }

    pub fn input(&mut self, name: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.push((name.to_string(), v.into()));
        self
    }

    pub fn result(&mut self, name: &str, v: impl Into<Value>) -> &mut Self {
        self.results.push((name.to_string(), v.into()));
        self
    }

    pub fn result_value(&self, name: &str) -> Option<&Value> {
        self.results.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Process exit status: 0 unless a check failed.
    pub fn exit_code(&self) -> i32 {
        match self.pass {
            Some(false) => 1,
            _ => 0,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        out.push_str("inputs:\n");
        write_fields(&mut out, &self.inputs, 1);
        out.push_str("results:\n");
        write_fields(&mut out, &self.results, 1);
        if let Some(pass) = self.pass {
            out.push_str(if pass { "PASS\n" } else { "FAIL\n" });
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), fields_json(&self.inputs));
        obj.insert("results".into(), fields_json(&self.results));
        if let Some(pass) = self.pass {
            obj.insert("pass".into(), json!(pass));
        }
        serde_json::Value::Object(obj)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

fn write_fields(out: &mut String, fields: &[(String, Value)], depth: usize) {
    let pad = "  ".repeat(depth);
    for (name, v) in fields {
        match v {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{name}:\n"));
                write_fields(out, inner, depth + 1);
            }
            Value::Matrix(rows) => {
                out.push_str(&format!("{pad}{name}:\n"));
                for row in rows {
                    let cells: Vec<String> = row.iter().map(|x| format_real(*x)).collect();
                    out.push_str(&format!("{pad}  [{}]\n", cells.join(", ")));
                }
            }
            _ => out.push_str(&format!("{pad}{name}: {}\n", scalar_text(v))),
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Real(x) => format_real(*x),
        Value::Dual(d) => format!("{d:#}"),
        Value::Bool(b) => b.to_string(),
        Value::Count(c) => c.to_string(),
        Value::Text(t) => t.clone(),
        Value::Matrix(_) | Value::Object(_) => unreachable!("handled by write_fields"),
    }
}

fn real_json(x: f64) -> serde_json::Value {
    serde_json::Value::Number(Number::from_f64(x).expect("report values are finite"))
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Real(x) => real_json(*x),
        Value::Dual(d) => json!({ "std": real_json(d.std_part()), "inf": real_json(d.inf_part()) }),
        Value::Bool(b) => json!(b),
        Value::Count(c) => json!(c),
        Value::Text(t) => json!(t),
        Value::Matrix(rows) => {
            serde_json::Value::Array(rows.iter().map(|r| r.iter().map(|x| real_json(*x)).collect()).collect())
        }
        Value::Object(fields) => fields_json(fields),
    }
}

fn fields_json(fields: &[(String, Value)]) -> serde_json::Value {
    let mut obj = Map::new();
    for (name, v) in fields {
        obj.insert(name.clone(), value_json(v));
    }
    serde_json::Value::Object(obj)
}
