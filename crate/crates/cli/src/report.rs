//! Report envelope and its JSON, CSV and text renderings.
//!
//! JSON reports follow schema v1: `{schema, command, version, char, engine,
//! inputs, outputs, findings, timings_ms}`. Everything but `timings_ms` is
//! deterministic for a fixed input.

use std::fmt::Write as _;

use regulus_core::asymptotics::{AsymptoteReport, Finding, MixedDegreeReport};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "regulus-report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One row per power: `m,reg,d,e_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub m: u32,
    pub reg: i64,
    pub d: u64,
    pub e_m: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub version: &'static str,
    pub char: u32,
    pub engine: String,
    pub inputs: Value,
    pub outputs: Value,
    pub findings: Vec<Finding>,
    pub timings_ms: Value,
    /// Sequence rows for the CSV rendering; not part of the JSON.
    #[serde(skip)]
    pub rows: Vec<SequenceRow>,
    /// Human-readable body for the text rendering.
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str, char: u32, engine: &str) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            version: env!("CARGO_PKG_VERSION"),
            char,
            engine: engine.into(),
            inputs: Value::Object(Default::default()),
            outputs: Value::Object(Default::default()),
            findings: Vec::new(),
            timings_ms: Value::Object(Default::default()),
            rows: Vec::new(),
            text: String::new(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => sequence_csv(&self.rows),
            Format::Text => {
                let mut s = self.text.clone();
                if !self.findings.is_empty() {
                    s.push_str(&findings_text(&self.findings));
                }
                s
            }
        }
    }
}

pub fn rows_of(report: &AsymptoteReport) -> Vec<SequenceRow> {
    report
        .e_sequence
        .iter()
        .map(|p| SequenceRow {
            m: p.m,
            reg: p.reg,
            d: report.d,
            e_m: p.e_m,
        })
        .collect()
}

pub fn rows_of_mixed(report: &MixedDegreeReport) -> Vec<SequenceRow> {
    report
        .rows
        .iter()
        .map(|r| SequenceRow {
            m: r.m,
            reg: r.predicted_reg,
            d: report.d as u64,
            e_m: r.predicted_e,
        })
        .collect()
}

pub fn sequence_csv(rows: &[SequenceRow]) -> String {
    let mut s = String::from("m,reg,d,e_m\n");
    for r in rows {
        writeln!(s, "{},{},{},{}", r.m, r.reg, r.d, r.e_m).unwrap();
    }
    s
}

pub fn findings_text(findings: &[Finding]) -> String {
    let mut s = String::from("findings:\n");
    for f in findings {
        let class = serde_json::to_value(f.class).expect("class serializes");
        writeln!(s, "  [{}] {}: {}", class.as_str().unwrap_or("?"), f.check, f.detail).unwrap();
    }
    s
}

/// The crossing table for each `m`: `p`, `reg J^p`, `f_m(p)`, with `p_m`
/// marked by `*`.
pub fn crossing_table(report: &MixedDegreeReport) -> String {
    let mut s = String::new();
    writeln!(s, "J = {}, d = {}, k = {}", report.j, report.d, report.k).unwrap();
    writeln!(s, "I = {}", report.ideal).unwrap();
    for row in &report.rows {
        let direct = row
            .direct_reg
            .map_or(String::new(), |r| format!(", direct {r}"));
        writeln!(
            s,
            "m = {}: p_m = {}, reg I^m = {} (e_m = {}{direct})",
            row.m, row.p_m, row.predicted_reg, row.predicted_e
        )
        .unwrap();
        writeln!(s, "  {:>4} {:>9} {:>8}", "p", "reg J^p", "f_m(p)").unwrap();
        for c in &row.crossing {
            let mark = if c.p == row.p_m { " *" } else { "" };
            writeln!(s, "  {:>4} {:>9} {:>8}{mark}", c.p, c.reg_j_p, c.f_m_p).unwrap();
        }
    }
    s
}

pub fn reg_text(r: Option<i64>) -> String {
    r.map_or("-inf".into(), |v| v.to_string())
}
