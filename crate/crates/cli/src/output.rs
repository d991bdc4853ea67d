use std::io::Write;

use eccentric::verification::Verdict;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::cli::Format;

/// One line of output in any format.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub kind: &'static str,
    pub inputs: Value,
    pub outputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

impl ReportRecord {
    pub fn new(kind: &'static str, inputs: Value, outputs: impl Serialize) -> Self {
        let outputs = serde_json::to_value(outputs).expect("report outputs serialize");
        ReportRecord { kind, inputs, outputs, verdict: None }
    }

    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = Some(verdict);
        self
    }
}

pub const CSV_HEADER: [&str; 4] = ["kind", "verdict", "inputs", "outputs"];

/// Serializes records through a single writer and remembers whether any
/// verdict failed.
pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header_written: bool,
    pub failed: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Emitter { format, out, header_written: false, failed: false }
    }

    pub fn emit(&mut self, record: &ReportRecord) -> std::io::Result<()> {
        if record.verdict == Some(Verdict::Fail) {
            self.failed = true;
        }
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, record)?;
                writeln!(self.out)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut self.out);
                if !self.header_written {
                    w.write_record(CSV_HEADER)?;
                    self.header_written = true;
                }
                let verdict = record.verdict.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([
                    record.kind,
                    verdict.as_str(),
                    &record.inputs.to_string(),
                    &record.outputs.to_string(),
                ])?;
                w.flush()
            }
            Format::Text => writeln!(self.out, "{}", text_line(record)),
        }
    }

    /// Writes a line outside the record stream (bare graph6 output).
    pub fn raw(&mut self, line: &str) -> std::io::Result<()> {
        writeln!(self.out, "{line}")
    }

    pub fn flush(&mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}

fn text_line(record: &ReportRecord) -> String {
    let mut line = record.kind.to_string();
    if let Some(v) = record.verdict {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    if let Some(claim) = record.outputs.get("claim").and_then(Value::as_str) {
        line.push_str(&format!(" [{claim}]"));
    }
    if let Value::Object(inputs) = &record.inputs {
        for (k, v) in inputs.iter().filter(|(_, v)| !v.is_null()) {
            line.push_str(&format!(" {k}={}", scalar(v)));
        }
    }
    line.push(':');
    match &record.outputs {
        Value::Object(fields) => push_fields(&mut line, fields, &record.inputs),
        other => line.push_str(&format!(" {}", scalar(other))),
    }
    line
}

/// Appends output fields, leaving out empties and fields the prefix already shows.
fn push_fields(line: &mut String, fields: &Map<String, Value>, inputs: &Value) {
    for (k, v) in fields {
        let shown = matches!(k.as_str(), "claim" | "verdict") || inputs.get(k) == Some(v);
        if shown || v.is_null() || v.as_array().is_some_and(|a| a.is_empty()) {
            continue;
        }
        line.push_str(&format!(" {k}={}", scalar(v)));
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(" "))
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering() {
        let r = ReportRecord::new("formula", json!({"name": "f", "n": 7, "d": 3}), json!({"value": 65}));
        assert_eq!(text_line(&r), "formula name=f n=7 d=3: value=65");
        let r = ReportRecord::new("theorem5", json!({"n": 6}), json!({"claim": "x", "n": 6, "certs": ["a", "b"], "notes": [], "verdict": "PASS"}))
            .with_verdict(Verdict::Pass);
        assert_eq!(text_line(&r), "theorem5 PASS [x] n=6: certs=[a b]");
    }

    #[test]
    fn csv_has_one_header() {
        let mut e = Emitter::new(Format::Csv, Vec::new());
        let r = ReportRecord::new("eci", json!({"line": 1}), json!({"eci": 14}));
        e.emit(&r).unwrap();
        e.emit(&r).unwrap();
        let text = String::from_utf8(e.out).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("kind,")).count(), 1);
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn failures_are_tracked() {
        let mut e = Emitter::new(Format::Json, Vec::new());
        e.emit(&ReportRecord::new("table1", json!({}), json!({})).with_verdict(Verdict::Pass)).unwrap();
        assert!(!e.failed);
        e.emit(&ReportRecord::new("table1", json!({}), json!({})).with_verdict(Verdict::Fail)).unwrap();
        assert!(e.failed);
    }
}
