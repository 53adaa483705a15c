//! Residuals, pass/fail reports and the JSON number format shared by all
//! machine-readable outputs.

use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

/// Renders a double with 17 significant digits, which round-trips exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON number carrying the [`fmt_f64`] text verbatim; non-finite values
/// become `null`.
pub fn json_number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&fmt_f64(x)).map(Value::Number).unwrap_or(Value::Null)
}

/// `[re, im]` pair.
pub fn json_complex(z: Complex64) -> Value {
    Value::Array(vec![json_number(z.re), json_number(z.im)])
}

/// `|lhs − rhs| / (1 + max(|lhs|, |rhs|))`: the one residual used by every
/// check and suite.
pub fn residual(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / (1.0 + lhs.norm().max(rhs.norm()))
}

pub fn residual_real(lhs: f64, rhs: f64) -> f64 {
    residual(Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub pass: bool,
}

/// An ordered list of named checks evaluated against one tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub tol: f64,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(tol: f64) -> Self {
        Self { tol, checks: Vec::new() }
    }

    /// Records `residual(lhs, rhs)` under `name`.
    pub fn compare(&mut self, name: impl Into<String>, lhs: Complex64, rhs: Complex64) {
        self.record(name, residual(lhs, rhs));
    }

    pub fn record(&mut self, name: impl Into<String>, residual: f64) {
        // NaN never passes.
        let pass = residual <= self.tol;
        self.checks.push(Check {
            name: name.into(),
            residual,
            pass,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| if c.residual.is_nan() { f64::INFINITY } else { c.residual })
            .fold(0.0, f64::max)
    }

    /// `{check_name: {"pass": bool, "residual": x}}` in insertion order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for c in &self.checks {
            let mut entry = Map::new();
            entry.insert("pass".into(), Value::Bool(c.pass));
            entry.insert("residual".into(), json_number(c.residual));
            map.insert(c.name.clone(), Value::Object(entry));
        }
        Value::Object(map)
    }
}
