use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use twcount::IntPolynomial;

/// Why a run did not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or malformed input, or an option combination that makes no sense (exit 2).
    Usage(String),
    /// The library rejected the input (exit 1).
    Engine(twcount::Error),
}

impl From<twcount::Error> for Failure {
    fn from(e: twcount::Error) -> Self {
        Failure::Engine(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Integer(BigInt),
    Polynomial(IntPolynomial),
    Histogram(BTreeMap<usize, BigInt>),
    Text(String),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Integer(v) => s.serialize_str(&v.to_string()),
            Value::Polynomial(p) => {
                let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
                for c in p.coeffs() {
                    seq.serialize_element(&c.to_string())?;
                }
                seq.end()
            }
            Value::Histogram(h) => {
                let mut map = s.serialize_map(Some(h.len()))?;
                for (k, v) in h {
                    map.serialize_entry(&k.to_string(), &v.to_string())?;
                }
                map.end()
            }
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

impl Value {
    fn human(&self) -> String {
        match self {
            Value::Integer(v) => format!(" {v}\n"),
            Value::Polynomial(p) => format!(" {p}\n"),
            Value::Histogram(h) if h.is_empty() => " (no cycle covers)\n".into(),
            Value::Histogram(h) => h.iter().fold(String::from("\n"), |mut out, (k, v)| {
                let _ = writeln!(out, "  {k}: {v}");
                out
            }),
            Value::Text(t) => format!("\n{t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub oracle: &'static str,
    pub cap: String,
    pub status: Status,
    pub oracle_result: Value,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input_sha256: String,
    pub width: usize,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<Verification>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn is_mismatch(&self) -> bool {
        matches!(&self.verify, Some(v) if v.status == Status::Mismatch)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut out = serde_json::to_string(self).expect("report serializes");
            out.push('\n');
            return out;
        }
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "input_sha256: {}", self.input_sha256);
        let _ = writeln!(out, "width: {}", self.width);
        let _ = write!(out, "result:{}", self.result.human());
        if let Some(v) = &self.verify {
            let status = match v.status {
                Status::Match => "MATCH",
                Status::Mismatch => "MISMATCH",
            };
            let _ = writeln!(out, "verify: {status} (oracle {}, {})", v.oracle, v.cap);
            if v.status == Status::Mismatch {
                let _ = write!(out, "oracle result:{}", v.oracle_result.human());
            }
        }
        let _ = writeln!(out, "elapsed_ms: {}", self.elapsed_ms);
        out
    }
}
