use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::reduction_pct;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Standard,
    Mollifier,
    Angular,
    Combined,
    Freq,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Standard, Method::Mollifier, Method::Angular, Method::Combined, Method::Freq];

    pub fn name(self) -> &'static str {
        match self {
            Method::Standard => "standard",
            Method::Mollifier => "mollifier",
            Method::Angular => "angular",
            Method::Combined => "combined",
            Method::Freq => "freq",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorEntry {
    pub phantom: String,
    pub lambda: f64,
    pub method: Method,
    pub l1_error: f64,
    pub reduction_pct: f64,
    pub sigma: Option<f64>,
}

/// Error rows; reductions are relative to the standard row of the same
/// phantom and frequency.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub entries: Vec<ErrorEntry>,
}

impl ErrorReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn standard_error(&self, phantom: &str, lambda: f64) -> Option<f64> {
        self.find(phantom, lambda, Method::Standard).map(|e| e.l1_error)
    }

    pub fn find(&self, phantom: &str, lambda: f64, method: Method) -> Option<&ErrorEntry> {
        self.entries.iter().find(|e| e.phantom == phantom && e.lambda == lambda && e.method == method)
    }

    /// Appends a row. A non-standard row needs its standard row first.
    pub fn push(&mut self, phantom: &str, lambda: f64, method: Method, l1_error: f64, sigma: Option<f64>) -> Result<()> {
        let reduction = match method {
            Method::Standard => 0.0,
            _ => {
                let std = self.standard_error(phantom, lambda).ok_or_else(|| {
                    Error::InvalidParam(format!("no standard row for {phantom} at lambda {lambda}"))
                })?;
                reduction_pct(l1_error, std)
            }
        };
        self.entries.push(ErrorEntry {
            phantom: phantom.to_string(),
            lambda,
            method,
            l1_error,
            reduction_pct: reduction,
            sigma,
        });
        Ok(())
    }

    pub fn extend(&mut self, other: ErrorReport) {
        self.entries.extend(other.entries);
    }
}

pub const CSV_HEADER: &str = "phantom,lambda,method,l1_error,reduction_pct,sigma";

/// CSV (one line per entry) and a text table with one row per
/// (phantom, lambda) and the mollifier / angular / combined reductions.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub csv: String,
    pub text: String,
    pub rows: usize,
}

fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn emit_error_table(report: &ErrorReport) -> ErrorTable {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for e in &report.entries {
        let sigma = e.sigma.map(sig9).unwrap_or_default();
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            e.phantom,
            sig9(e.lambda),
            e.method.name(),
            sig9(e.l1_error),
            sig9(e.reduction_pct),
            sigma
        );
    }

    let mut keys: Vec<(&str, f64)> = Vec::new();
    for e in &report.entries {
        if !keys.iter().any(|&(p, l)| p == e.phantom && l == e.lambda) {
            keys.push((&e.phantom, e.lambda));
        }
    }
    let cell = |p: &str, l: f64, m: Method| {
        report.find(p, l, m).map(|e| format!("{:.1}%", e.reduction_pct)).unwrap_or_else(|| "-".into())
    };
    let mut text = format!("{:<18} {:>8} {:>11} {:>11} {:>11}\n", "phantom", "lambda", "mollifier", "angular", "combined");
    for &(p, l) in &keys {
        let _ = writeln!(
            text,
            "{:<18} {:>8} {:>11} {:>11} {:>11}",
            p,
            format!("{l}"),
            cell(p, l, Method::Mollifier),
            cell(p, l, Method::Angular),
            cell(p, l, Method::Combined)
        );
    }
    ErrorTable { csv, text, rows: keys.len() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let t = emit_error_table(&ErrorReport::new());
        assert_eq!(t.csv, format!("{CSV_HEADER}\n"));
        assert_eq!(t.rows, 0);
    }

    #[test]
    fn one_standard_one_angular_makes_one_row() {
        let mut r = ErrorReport::new();
        r.push("ovals", 15.0, Method::Standard, 0.2, None).unwrap();
        r.push("ovals", 15.0, Method::Angular, 0.15, None).unwrap();
        let t = emit_error_table(&r);
        assert_eq!(t.rows, 1);
        assert_eq!(t.csv.lines().count(), 3);
        let line = t.text.lines().nth(1).unwrap();
        assert!(line.contains("25.0%"));
        assert_eq!(line.matches('-').count(), 2);
    }

    #[test]
    fn csv_uses_nine_significant_digits() {
        let mut r = ErrorReport::new();
        r.push("gaussian", 10.0, Method::Standard, 1.0 / 3.0, None).unwrap();
        r.push("gaussian", 10.0, Method::Mollifier, 0.25, Some(0.125)).unwrap();
        let t = emit_error_table(&r);
        let lines: Vec<&str> = t.csv.lines().collect();
        assert_eq!(lines[1], "gaussian,1.00000000e1,standard,3.33333333e-1,0.00000000e0,");
        assert_eq!(lines[2], "gaussian,1.00000000e1,mollifier,2.50000000e-1,2.50000000e1,1.25000000e-1");
    }

    #[test]
    fn reduction_needs_standard_row() {
        let mut r = ErrorReport::new();
        assert!(r.push("x", 1.0, Method::Angular, 0.1, None).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
    }
}
