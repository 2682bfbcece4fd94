//! CSV and JSON serialization of command results.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::config::{Command, Format, RunConfig};
use crate::error::CliError;

/// Renders a double with 17 significant digits, enough to round-trip.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Named numeric columns of equal length plus optional summary values.
///
/// CSV: a header row, one record per row, then one `label,value,...`
/// record per footer entry. JSON: `{"meta", "columns", "summary"}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub meta: Map<String, Value>,
    pub columns: Vec<(String, Vec<f64>)>,
    pub footer: Vec<(String, f64)>,
}

impl Table {
    pub fn new(meta: Map<String, Value>) -> Self {
        Self {
            meta,
            columns: Vec::new(),
            footer: Vec::new(),
        }
    }

    pub fn push_column(&mut self, name: impl Into<String>, values: Vec<f64>) {
        debug_assert!(self.columns.first().is_none_or(|(_, c)| c.len() == values.len()));
        self.columns.push((name.into(), values));
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn footer_value(&self, name: &str) -> Option<f64> {
        self.footer.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |(_, c)| c.len())
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::WriterBuilder::new().flexible(true).from_writer(w);
        out.write_record(self.columns.iter().map(|(n, _)| n.as_str()))?;
        for i in 0..self.rows() {
            out.write_record(self.columns.iter().map(|(_, c)| fmt_float(c[i])))?;
        }
        for (label, value) in &self.footer {
            let mut record = vec![label.clone(), fmt_float(*value)];
            record.resize(self.columns.len().max(2), String::new());
            out.write_record(&record)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let columns: Map<String, Value> = self
            .columns
            .iter()
            .map(|(n, c)| (n.clone(), json!(c)))
            .collect();
        let mut obj = Map::new();
        obj.insert("meta".into(), Value::Object(self.meta.clone()));
        obj.insert("columns".into(), Value::Object(columns));
        if !self.footer.is_empty() {
            let summary: Map<String, Value> = self
                .footer
                .iter()
                .map(|(n, v)| (n.clone(), json!(v)))
                .collect();
            obj.insert("summary".into(), Value::Object(summary));
        }
        Value::Object(obj)
    }
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub id: usize,
    pub name: String,
    pub measured: f64,
    pub relation: &'static str,
    pub threshold: f64,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub meta: Map<String, Value>,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["id", "check", "measured", "relation", "threshold", "status", "detail"])?;
        for c in &self.checks {
            out.write_record([
                c.id.to_string(),
                c.name.clone(),
                fmt_float(c.measured),
                c.relation.to_string(),
                fmt_float(c.threshold),
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                c.detail.clone(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "check": c.name,
                    "measured": c.measured,
                    "relation": c.relation,
                    "threshold": c.threshold,
                    "pass": c.passed,
                    "detail": c.detail,
                })
            })
            .collect();
        json!({
            "meta": self.meta,
            "all_pass": self.all_passed(),
            "checks": checks,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Table(Table),
    Report(VerifyReport),
}

impl Output {
    pub fn write<W: Write>(&self, format: Format, mut w: W) -> Result<(), CliError> {
        match (self, format) {
            (Output::Table(t), Format::Csv) => t.write_csv(w),
            (Output::Report(r), Format::Csv) => r.write_csv(w),
            (Output::Table(t), Format::Json) => write_json(&t.to_json(), &mut w),
            (Output::Report(r), Format::Json) => write_json(&r.to_json(), &mut w),
        }
    }
}

fn write_json<W: Write>(value: &Value, w: &mut W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

/// Run metadata: the command, every effective flag, and the tool version.
pub fn meta(command: Command, config: &RunConfig) -> Map<String, Value> {
    let name = match command {
        Command::Iterate => "iterate",
        Command::Figure => "figure",
        Command::Verify => "verify",
        Command::Simulate => "simulate",
    };
    let flags = json!({
        "r": config.r,
        "init": config.init,
        "steps": config.steps,
        "grid": config.grid,
        "n": config.n,
        "seed": config.seed,
        "mode": format!("{:?}", config.mode).to_lowercase(),
        "push_steps": config.push_steps,
        "burn_in": config.burn_in,
    });
    let mut m = Map::new();
    m.insert("command".into(), json!(name));
    m.insert("flags".into(), flags);
    m.insert(
        "versions".into(),
        json!({ "logmap": env!("CARGO_PKG_VERSION") }),
    );
    m.insert("seed".into(), json!(config.seed));
    m
}
