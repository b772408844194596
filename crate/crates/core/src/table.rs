//! Measurement tables and their CSV form.
//!
//! CSV layout: header `x,method,value,unit`, one row per sample, numbers in
//! Rust's shortest round-trip decimal form, LF line endings.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

pub const CSV_HEADER: &str = "x,method,value,unit";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    Seconds,
    Count,
}

impl Unit {
    pub fn label(self) -> &'static str {
        match self {
            Unit::Seconds => "seconds",
            Unit::Count => "count",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seconds" => Ok(Unit::Seconds),
            "count" => Ok(Unit::Count),
            other => Err(Error::Table(format!("unknown unit {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub x: f64,
    pub method: String,
    pub value: f64,
    pub unit: Unit,
}

/// Rows of `(x, method, value, unit)`. Within a method, `x` strictly
/// increases; all rows share one unit.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SampleTable {
    rows: Vec<Sample>,
}

impl SampleTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64, method: &str, value: f64, unit: Unit) -> Result<()> {
        if !x.is_finite() || !value.is_finite() {
            return Err(Error::Table(format!("non-finite sample ({x}, {value})")));
        }
        if method.is_empty() || method.contains([',', '\n', '\r', '"']) {
            return Err(Error::Table(format!("bad method label {method:?}")));
        }
        if let Some(first) = self.rows.first() {
            if first.unit != unit {
                return Err(Error::Table(format!("unit {unit} differs from {}", first.unit)));
            }
        }
        if let Some(last) = self.rows.iter().rev().find(|r| r.method == method) {
            if x <= last.x {
                return Err(Error::Table(format!(
                    "x = {x} does not increase after {} for {method}",
                    last.x
                )));
            }
        }
        self.rows.push(Sample { x, method: method.to_string(), value, unit });
        Ok(())
    }

    pub fn rows(&self) -> &[Sample] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn unit(&self) -> Option<Unit> {
        self.rows.first().map(|r| r.unit)
    }

    /// Method labels in order of first appearance.
    pub fn methods(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.method.as_str()) {
                out.push(&r.method);
            }
        }
        out
    }

    /// `(x, value)` pairs of one method, in increasing `x`.
    pub fn series(&self, method: &str) -> Vec<(f64, f64)> {
        self.rows.iter().filter(|r| r.method == method).map(|r| (r.x, r.value)).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.x, r.method, r.value, r.unit));
        }
        s
    }

    /// Parses text produced by [`to_csv`](Self::to_csv).
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.split_terminator('\n');
        match lines.next() {
            Some(CSV_HEADER) => {}
            other => {
                return Err(Error::Parse { line: 1, detail: format!("expected header, got {other:?}") })
            }
        }
        let mut table = SampleTable::new();
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let bad = |detail: String| Error::Parse { line: lineno, detail };
            let fields: Vec<&str> = line.split(',').collect();
            let [x, method, value, unit] = fields[..] else {
                return Err(bad(format!("expected 4 fields, got {}", fields.len())));
            };
            let x: f64 = x.parse().map_err(|_| bad(format!("bad x {x:?}")))?;
            let value: f64 = value.parse().map_err(|_| bad(format!("bad value {value:?}")))?;
            let unit: Unit = unit.parse().map_err(|e: Error| bad(e.to_string()))?;
            table.push(x, method, value, unit).map_err(|e| bad(e.to_string()))?;
        }
        Ok(table)
    }
}
