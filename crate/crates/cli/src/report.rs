use std::collections::BTreeMap;

use quartic_core::numeric::ConvergenceReport;
use serde::Serialize;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// An exact value rendered as text, or a double.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReportValue {
    Exact(String),
    Float(f64),
}

/// Shortest round-trip decimal, switching to exponent form outside `[1e-4, 1e16)`.
pub fn fmt_f64(x: f64) -> String {
    let mag = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-4..1e16).contains(&mag) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

impl ReportValue {
    fn render(&self) -> String {
        match self {
            ReportValue::Exact(s) => s.clone(),
            ReportValue::Float(x) => fmt_f64(*x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: Option<f64>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, residual: Option<f64>) -> Self {
        Check {
            name: name.into(),
            pass,
            residual,
        }
    }

    /// Passes when `residual ≤ tol`; a NaN residual fails.
    pub fn within(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        Check::new(name, residual <= tol, Some(residual))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub m: u32,
    pub d: Vec<ReportValue>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<ReportValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<ReportValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<ConvergenceReport>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            value: None,
            coefficients: None,
            trace: None,
            checks: Vec::new(),
            table: None,
            timestamp: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.trace.as_ref().is_none_or(|t| t.converged)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    /// Tables are written wide (`m,d_0,…`); every other report as
    /// `kind,name,value,detail` records.
    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(false)
            .from_writer(Vec::new());
        if let Some(rows) = &self.table {
            let width = rows.iter().map(|r| r.d.len()).max().unwrap_or(0);
            let mut header = vec!["m".to_string()];
            header.extend((0..width).map(|l| format!("d_{l}")));
            w.write_record(&header).expect("in-memory write");
            for row in rows {
                let mut rec = vec![row.m.to_string()];
                rec.extend(row.d.iter().map(ReportValue::render));
                rec.resize(width + 1, String::new());
                w.write_record(&rec).expect("in-memory write");
            }
        } else {
            let mut put = |kind: &str, name: &str, value: String, detail: String| {
                w.write_record([kind, name, &value, &detail])
                    .expect("in-memory write");
            };
            put("kind", "name", "value".into(), "detail".into());
            put(
                "schema",
                "version",
                SCHEMA_VERSION.to_string(),
                String::new(),
            );
            put("command", &self.command, String::new(), String::new());
            for (k, v) in &self.inputs {
                put("input", k, v.clone(), String::new());
            }
            if let Some(v) = &self.value {
                put("value", "", v.render(), String::new());
            }
            for (l, c) in self.coefficients.iter().flatten().enumerate() {
                put("coefficient", &format!("d_{l}"), c.render(), String::new());
            }
            if let Some(t) = &self.trace {
                put("iterations", "", t.iterations.to_string(), String::new());
                put("converged", "", t.converged.to_string(), String::new());
                let order = t.estimated_order.map(fmt_f64).unwrap_or_default();
                put("order", "", order, String::new());
                for (n, e) in t.error_trace.iter().enumerate() {
                    put("trace", &n.to_string(), fmt_f64(*e), String::new());
                }
                for warning in &t.warnings {
                    put("warning", "", warning.clone(), String::new());
                }
            }
            for c in &self.checks {
                let status = if c.pass { "pass" } else { "fail" };
                let residual = c.residual.map(fmt_f64).unwrap_or_default();
                put("check", &c.name, status.into(), residual);
            }
            if let Some(ts) = self.timestamp {
                put("timestamp", "", ts.to_string(), String::new());
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 output")
    }
}
