//! Deterministic JSON, CSV and text rendering of command output.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::precise::Real;

/// Significant digits of every serialized float.
pub const FLOAT_DIGITS: usize = 17;

pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{:.*e}", FLOAT_DIGITS - 1, v)
    } else {
        format!("{v}")
    }
}

pub fn fmt_real(v: &Real) -> String {
    v.to_sci_string(FLOAT_DIGITS)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Str(String),
    Bool(bool),
    Null,
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Str(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => String::new(),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => s.serialize_i64(*v),
            Value::Str(v) => s.serialize_str(v),
            Value::Bool(v) => s.serialize_bool(*v),
            Value::Null => s.serialize_none(),
        }
    }
}

/// One output record; columns keep insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row(Vec<(&'static str, Value)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &'static str, v: impl Into<i64>) -> Self {
        self.0.push((key, Value::Int(v.into())));
        self
    }

    pub fn str(mut self, key: &'static str, v: impl Into<String>) -> Self {
        self.0.push((key, Value::Str(v.into())));
        self
    }

    pub fn bool(mut self, key: &'static str, v: bool) -> Self {
        self.0.push((key, Value::Bool(v)));
        self
    }

    pub fn real(self, key: &'static str, v: &Real) -> Self {
        self.str(key, fmt_real(v))
    }

    pub fn float(self, key: &'static str, v: f64) -> Self {
        self.str(key, fmt_f64(v))
    }

    pub fn null(mut self, key: &'static str) -> Self {
        self.0.push((key, Value::Null));
        self
    }

    pub fn opt_int(self, key: &'static str, v: Option<impl Into<i64>>) -> Self {
        match v {
            Some(v) => self.int(key, v),
            None => self.null(key),
        }
    }

    pub fn opt_bool(self, key: &'static str, v: Option<bool>) -> Self {
        match v {
            Some(v) => self.bool(key, v),
            None => self.null(key),
        }
    }

    pub fn columns(&self) -> Vec<&'static str> {
        self.0.iter().map(|(k, _)| *k).collect()
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub tag: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(
        tag: &str,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            tag: tag.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn row(&self) -> Row {
        Row::new()
            .str("tag", self.tag.clone())
            .str("name", self.name.clone())
            .bool("passed", self.passed)
            .str("detail", self.detail.clone())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub config: C,
    pub rows: Vec<Row>,
    pub checks: Vec<Check>,
    pub version: String,
    #[serde(skip)]
    pub columns: Vec<&'static str>,
}

impl<C: Serialize> Report<C> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(
                self.columns
                    .iter()
                    .map(|c| row.get(c).map(Value::text).unwrap_or_default()),
            )?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .map(|c| r.get(c).map(Value::text).unwrap_or_default())
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain(std::iter::once(c.len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        if !self.rows.is_empty() {
            let line = |vals: Vec<&str>| {
                vals.iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let _ = writeln!(out, "{}", line(self.columns.clone()));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {} ({}): {}", c.name, c.tag, c.detail);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report<&'static str> {
        let rows = vec![
            Row::new().int("r", 2).float("x", 0.25).bool("ok", true),
            Row::new().int("r", 3).float("x", 1.0 / 3.0).null("ok"),
        ];
        Report {
            config: "cfg",
            columns: rows[0].columns(),
            rows,
            checks: vec![Check::new("t", "demo", true, "fine")],
            version: "0.1.0".into(),
        }
    }

    #[test]
    fn floats_have_fixed_width() {
        assert_eq!(fmt_f64(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_f64(-1.0 / 3.0), "-3.3333333333333331e-1");
    }

    #[test]
    fn json_keeps_column_order() {
        let s = sample().to_json().unwrap();
        let r = s.find("\"r\"").unwrap();
        let x = s.find("\"x\"").unwrap();
        let ok = s.find("\"ok\"").unwrap();
        assert!(r < x && x < ok);
        assert!(s.contains("\"version\": \"0.1.0\""));
    }

    #[test]
    fn csv_has_header_and_blank_nulls() {
        let s = sample().to_csv().unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "r,x,ok");
        assert_eq!(lines[1], "2,2.5000000000000000e-1,true");
        assert_eq!(lines[2], "3,3.3333333333333331e-1,");
    }

    #[test]
    fn text_lists_checks() {
        let s = sample().to_text();
        assert!(s.contains("[PASS] demo (t): fine"));
    }
}
