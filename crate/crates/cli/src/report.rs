//! The shared report envelope and its JSON and text renderings.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, BigUint};
use serde_json::{json, Map, Value};
use zetacode::enumerator::format_rational;
use zetacode::zeta::RhVerdict;

use crate::Format;

pub const SCHEMA: &str = "zetacode/1";

pub struct Report {
    command: &'static str,
    result: Map<String, Value>,
    checks: BTreeMap<String, bool>,
    notices: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            result: Map::new(),
            checks: BTreeMap::new(),
            notices: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, name: &str, holds: bool) {
        self.checks.insert(name.to_string(), holds);
    }

    pub fn notice(&mut self, msg: impl Into<String>) {
        self.notices.push(msg.into());
    }

    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, &ok)| !ok)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "result": Value::Object(self.result.clone()),
            "checks": self.checks,
            "notices": self.notices,
        })
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_json();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                flatten("", &value, &mut out);
                out
            }
        }
    }
}

/// `path = value` lines; scalar arrays are joined with spaces.
fn flatten(path: &str, v: &Value, out: &mut String) {
    let child = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&child(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            if parts.is_empty() {
                out.push_str(&format!("{path} =\n"));
            } else {
                out.push_str(&format!("{path} = {}\n", parts.join(" ")));
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), item, out);
            }
        }
        _ => out.push_str(&format!("{path} = {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rational(v: &BigRational) -> Value {
    Value::String(format_rational(v))
}

pub fn rationals(vs: &[BigRational]) -> Value {
    Value::Array(vs.iter().map(rational).collect())
}

pub fn naturals(vs: &[BigUint]) -> Value {
    Value::Array(vs.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn integers(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(|v| Value::String(v.to_string())).collect())
}

/// Fixed 17-significant-digit rendering.
pub fn float(v: f64) -> Value {
    Value::String(format!("{v:.16e}"))
}

pub fn verdict(v: &RhVerdict, q: u64) -> Value {
    let sq = (q as f64).sqrt();
    let mut roots = v.roots.clone();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let roots: Vec<Value> = roots
        .iter()
        .map(|r| json!({ "re": float(r.re), "im": float(r.im), "abs_times_sqrt_q": float(r.norm() * sq) }))
        .collect();
    json!({
        "holds": v.holds,
        "tolerance": float(v.tolerance),
        "max_deviation": float(v.max_deviation),
        "roots": roots,
        "diagnostics": v.diagnostics,
    })
}

pub fn opt_usize(v: Option<usize>) -> Value {
    v.map_or(Value::Null, Value::from)
}
