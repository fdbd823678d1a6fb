//! Run reports and their JSON / CSV / table serializations.
//!
//! JSON reports carry a top-level `"schema": "lucastile/1"` marker and
//! serialize every big integer as a decimal string; no floating point
//! appears anywhere. Key order is fixed by the struct definitions and
//! parameters are kept in a sorted map, so deserializing a report and
//! re-serializing it is byte-identical. Timings are opt-in precisely so
//! that repeated runs stay byte-for-byte reproducible.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::IdentityReport;
use crate::tiling::{TilingVerdict, Witness};

/// Schema marker for JSON reports.
pub const SCHEMA: &str = "lucastile/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// A named boolean outcome with an optional human-readable detail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub check: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl NamedCheck {
    pub fn new(check: impl Into<String>, ok: bool) -> Self {
        Self {
            check: check.into(),
            ok,
            detail: None,
        }
    }

    pub fn with_detail(check: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            ok,
            detail: Some(detail.into()),
        }
    }
}

/// One verdict of a run. The JSON form is the bare underlying record; the
/// three shapes are distinguished by their required fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Verdict {
    Identity(IdentityReport),
    Tiling(TilingVerdict),
    Check(NamedCheck),
}

impl Verdict {
    pub fn ok(&self) -> bool {
        match self {
            Verdict::Identity(r) => r.ok,
            Verdict::Tiling(t) => t.ok,
            Verdict::Check(c) => c.ok,
        }
    }
}

/// One row of the M_k census table. Counts are decimal strings to keep
/// consumers free of word-size limits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: u64,
    pub k: u32,
    pub m_k: String,
    pub closed_form: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Tabular payload of a run, when it has one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportData {
    Words { words: Vec<String> },
    Census { census: Vec<CensusRow> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTiming {
    pub step: String,
    pub millis: u64,
}

/// A complete run: what was asked, what was checked, and how it went.
/// `ok` is the conjunction of all verdict flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub data: Option<ReportData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Vec<StepTiming>>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, parameters: BTreeMap<String, String>) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            parameters,
            verdicts: Vec::new(),
            ok: true,
            data: None,
            timings: None,
        }
    }

    pub fn push(&mut self, verdict: Verdict) {
        self.ok &= verdict.ok();
        self.verdicts.push(verdict);
    }

    pub fn push_check(&mut self, check: NamedCheck) {
        self.push(Verdict::Check(check));
    }
}

/// Serialize a report in the requested format. A report with no verdicts
/// is refused: it would claim success while having checked nothing.
pub fn serialize(report: &RunReport, format: OutputFormat) -> Result<String> {
    if report.verdicts.is_empty() {
        return Err(Error::EmptyReport);
    }
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string(report).expect("report serialization");
            text.push('\n');
            Ok(text)
        }
        OutputFormat::Csv => csv_view(report),
        OutputFormat::Table => Ok(table_view(report)),
    }
}

fn csv_view(report: &RunReport) -> Result<String> {
    let mut out = String::new();
    match &report.data {
        Some(ReportData::Census { census }) => {
            out.push_str("n,k,M_k,closed_form,match\n");
            for row in census {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n, row.k, row.m_k, row.closed_form, row.matches
                )
                .unwrap();
            }
            return Ok(out);
        }
        Some(ReportData::Words { words }) => {
            out.push_str("word\n");
            for w in words {
                writeln!(out, "{w}").unwrap();
            }
            return Ok(out);
        }
        None => {}
    }
    if report.verdicts.iter().all(|v| matches!(v, Verdict::Identity(_))) {
        out.push_str("id,n,lhs,rhs,path,ok\n");
        for v in &report.verdicts {
            if let Verdict::Identity(r) = v {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.id.id(),
                    r.n,
                    r.lhs,
                    r.rhs,
                    r.path,
                    r.ok
                )
                .unwrap();
            }
        }
        return Ok(out);
    }
    if report.verdicts.iter().all(|v| matches!(v, Verdict::Tiling(_))) {
        out.push_str("method,ok,witness\n");
        for v in &report.verdicts {
            if let Verdict::Tiling(t) = v {
                let method = match t.method {
                    crate::tiling::CheckMethod::TwinPair => "twin_pair",
                    crate::tiling::CheckMethod::VoxelCover => "voxel_cover",
                };
                writeln!(out, "{},{},{}", method, t.ok, witness_text(&t.witness)).unwrap();
            }
        }
        return Ok(out);
    }
    if report.verdicts.iter().all(|v| matches!(v, Verdict::Check(_))) {
        out.push_str("check,ok,detail\n");
        for v in &report.verdicts {
            if let Verdict::Check(c) = v {
                writeln!(out, "{},{},{}", c.check, c.ok, c.detail.as_deref().unwrap_or("")).unwrap();
            }
        }
        return Ok(out);
    }
    Err(Error::UnsupportedFormat(
        "csv needs a tabular report; use json or table".into(),
    ))
}

fn witness_text(witness: &Option<Witness>) -> String {
    match witness {
        None => String::new(),
        Some(Witness::Size { expected, actual }) => {
            format!("size {actual} != {expected}")
        }
        Some(Witness::Pair { first, second }) => format!("pair {first} {second}"),
        Some(Witness::Voxel { coords, count }) => {
            let coords: Vec<String> = coords.iter().map(u8::to_string).collect();
            format!("voxel ({}) covered {count} times", coords.join(" "))
        }
    }
}

/// Digits of a word separated by single spaces.
fn spaced(word: &str) -> String {
    let chars: Vec<String> = word.chars().map(|c| c.to_string()).collect();
    chars.join(" ")
}

fn table_view(report: &RunReport) -> String {
    let mut out = String::new();
    writeln!(out, "lucastile {} — {}", report.version, report.command).unwrap();
    if !report.parameters.is_empty() {
        let params: Vec<String> = report
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "parameters: {}", params.join(" ")).unwrap();
    }
    out.push('\n');
    match &report.data {
        Some(ReportData::Words { words }) => {
            for w in words {
                writeln!(out, "{}", spaced(w)).unwrap();
            }
            out.push('\n');
        }
        Some(ReportData::Census { census }) => {
            writeln!(out, "{:>4} {:>4} {:>12} {:>12} {:>6}", "n", "k", "M_k", "closed", "match")
                .unwrap();
            for row in census {
                writeln!(
                    out,
                    "{:>4} {:>4} {:>12} {:>12} {:>6}",
                    row.n, row.k, row.m_k, row.closed_form, row.matches
                )
                .unwrap();
            }
            out.push('\n');
        }
        None => {}
    }
    for v in &report.verdicts {
        match v {
            Verdict::Identity(r) => {
                let aux = match r.aux_odd_n {
                    Some(a) => format!(" via n={a}"),
                    None => String::new(),
                };
                writeln!(
                    out,
                    "identity ({}) n={} [{}]{} lhs={} rhs={} {}",
                    r.id.id(),
                    r.n,
                    r.path,
                    aux,
                    r.lhs,
                    r.rhs,
                    flag(r.ok)
                )
                .unwrap();
            }
            Verdict::Tiling(t) => {
                let method = match t.method {
                    crate::tiling::CheckMethod::TwinPair => "twin_pair",
                    crate::tiling::CheckMethod::VoxelCover => "voxel_cover",
                };
                let witness = match &t.witness {
                    Some(w) => format!(" [{}]", witness_text(&Some(w.clone()))),
                    None => String::new(),
                };
                writeln!(out, "tiling {method} {}{witness}", flag(t.ok)).unwrap();
            }
            Verdict::Check(c) => {
                let detail = match &c.detail {
                    Some(d) => format!(" ({d})"),
                    None => String::new(),
                };
                writeln!(out, "check {} {}{detail}", c.check, flag(c.ok)).unwrap();
            }
        }
    }
    if let Some(timings) = &report.timings {
        out.push('\n');
        for t in timings {
            writeln!(out, "timing {} {} ms", t.step, t.millis).unwrap();
        }
    }
    out.push('\n');
    writeln!(out, "overall: {}", flag(report.ok)).unwrap();
    out
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{verify_by_odd_partition, Identity};

    fn sample_report() -> RunReport {
        let mut report = RunReport::new(
            "identities check",
            BTreeMap::from([("n".to_string(), "5".to_string())]),
        );
        report.push(Verdict::Identity(
            verify_by_odd_partition(Identity::TotalCount, 5).unwrap(),
        ));
        report.push_check(NamedCheck::with_detail("census", true, "M_k matches"));
        report
    }

    #[test]
    fn empty_reports_are_refused() {
        let report = RunReport::new("code gen", BTreeMap::new());
        assert!(matches!(
            serialize(&report, OutputFormat::Json),
            Err(Error::EmptyReport)
        ));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let report = sample_report();
        let text = serialize(&report, OutputFormat::Json).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serialize(&back, OutputFormat::Json).unwrap(), text);
    }

    #[test]
    fn json_carries_the_schema_marker() {
        let text = serialize(&sample_report(), OutputFormat::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["schema"], "lucastile/1");
        assert_eq!(value["verdicts"][0]["lhs"], "31");
    }

    #[test]
    fn census_csv_has_the_documented_header() {
        let mut report = RunReport::new("partition stats", BTreeMap::new());
        report.push_check(NamedCheck::new("census", true));
        report.data = Some(ReportData::Census {
            census: vec![CensusRow {
                n: 5,
                k: 2,
                m_k: "5".into(),
                closed_form: "5".into(),
                matches: true,
            }],
        });
        let text = serialize(&report, OutputFormat::Csv).unwrap();
        assert_eq!(text, "n,k,M_k,closed_form,match\n5,2,5,5,true\n");
    }

    #[test]
    fn mixed_verdicts_without_data_refuse_csv() {
        let report = sample_report();
        assert!(matches!(
            serialize(&report, OutputFormat::Csv),
            Err(Error::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn table_view_spells_out_words() {
        let mut report = RunReport::new("code gen", BTreeMap::new());
        report.push_check(NamedCheck::new("sizes", true));
        report.data = Some(ReportData::Words {
            words: vec!["12000".into()],
        });
        let text = serialize(&report, OutputFormat::Table).unwrap();
        assert!(text.contains("1 2 0 0 0"));
        assert!(text.trim_end().ends_with("overall: ok"));
    }
}
