//! Deterministic report rendering.
//!
//! Reports are tables with a keyed comment header. CSV output uses `.` as
//! the decimal separator, no grouping, and LF line endings; floats are
//! printed in Rust's shortest round-trip decimal form, so every numeric in
//! a report parses back to the exact `f64` it came from. JSON output
//! mirrors the same structure.

use serde::ser::{Serialize, Serializer};

/// Shortest decimal representation that round-trips to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// One report cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Num(f64),
    Text(String),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(i) => s.serialize_i64(*i),
            Value::Num(v) if v.is_finite() => s.serialize_f64(*v),
            Value::Num(v) => s.serialize_str(&fmt_f64(*v)),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
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

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

/// A keyed header plus a rectangular table of cells.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    pub command: String,
    pub header: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            header: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn header_entry(&mut self, key: &str, value: impl ToString) {
        self.header.push((key.to_string(), value.to_string()));
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Csv => self.render_csv(),
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command={}\n", self.command));
        for (k, v) in &self.header {
            out.push_str(&format!("# {k}={v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|cell| match cell {
                    Value::Int(i) => i.to_string(),
                    Value::Num(v) => fmt_f64(*v),
                    Value::Text(t) => t.clone(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}
