//! Result records and the three output formats.

use std::fmt::Write as _;
use std::time::Duration;

use anyhow::Result;
use serde::Serialize;
use ultrasync_core::SyncReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Report-only claim whose inequality held.
    ReportPass,
    /// Report-only claim whose inequality failed. Never affects exit status.
    ReportFail,
}

impl Status {
    pub fn new(holds: bool, asserted: bool) -> Status {
        match (asserted, holds) {
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
            (false, true) => Status::ReportPass,
            (false, false) => Status::ReportFail,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportPass => "report-pass",
            Status::ReportFail => "report-fail",
        }
    }

    pub fn is_asserted(self) -> bool {
        matches!(self, Status::Pass | Status::Fail)
    }
}

/// One line of record output. `family` names the sequence family or the
/// sub-case of the claim (`d1`, `j=121`, ...). Exact values are decimal
/// strings, rationals as `num/den`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub claim_id: String,
    pub family: String,
    pub n: usize,
    pub index: Option<usize>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Record {
    pub fn from_report(claim_id: &str, report: &SyncReport, family: &str, asserted: bool) -> Vec<Record> {
        report
            .comparisons
            .iter()
            .map(|c| Record {
                claim_id: claim_id.to_string(),
                family: if c.case.is_empty() {
                    family.to_string()
                } else {
                    c.case.clone()
                },
                n: report.n,
                index: Some(c.index),
                status: Status::new(c.holds, asserted),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            })
            .collect()
    }
}

/// All records of one claim plus free-form notes for the summary.
#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub claim_id: String,
    pub records: Vec<Record>,
    /// Failure witnesses and findings, printed in the summary only.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl ClaimResult {
    pub fn new(claim_id: impl Into<String>) -> Self {
        ClaimResult {
            claim_id: claim_id.into(),
            records: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn failed(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    fn kind(&self) -> &'static str {
        let asserted = self.records.iter().filter(|r| r.status.is_asserted()).count();
        match asserted {
            0 => "report",
            a if a == self.records.len() => "assert",
            _ => "mixed",
        }
    }

    fn verdict(&self) -> &'static str {
        if self.failed() {
            "FAIL"
        } else if self.kind() == "report" {
            if self.records.iter().any(|r| r.status == Status::ReportFail) {
                "REPORTED (some fail)"
            } else {
                "REPORTED (all hold)"
            }
        } else {
            "PASS"
        }
    }

    fn n_range(&self) -> String {
        let lo = self.records.iter().map(|r| r.n).min();
        let hi = self.records.iter().map(|r| r.n).max();
        match (lo, hi) {
            (Some(lo), Some(hi)) if lo == hi => format!("{lo}"),
            (Some(lo), Some(hi)) => format!("{lo}..{hi}"),
            _ => "-".into(),
        }
    }
}

/// Outcome of a whole run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config_echo: String,
    pub claims: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn new(config_echo: String) -> Self {
        VerifyReport {
            config_echo,
            claims: Vec::new(),
        }
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.claims.extend(other.claims);
    }

    /// Nonzero iff an asserted claim failed.
    pub fn exit_code(&self) -> i32 {
        if self.claims.iter().any(ClaimResult::failed) {
            1
        } else {
            0
        }
    }

    pub fn records(&self) -> impl Iterator<Item = &Record> {
        self.claims.iter().flat_map(|c| c.records.iter())
    }

    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for r in self.records() {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut wrote = false;
        for r in self.records() {
            w.serialize(r)?;
            wrote = true;
        }
        if !wrote {
            w.write_record(["claim_id", "family", "n", "index", "status", "lhs", "rhs"])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn render_summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.config_echo);
        let _ = writeln!(
            out,
            "{:<26} {:<7} {:<9} {:>8} {:>7} {:>10}  verdict",
            "claim", "kind", "n", "checked", "failed", "time"
        );
        for c in &self.claims {
            let failed = c
                .records
                .iter()
                .filter(|r| matches!(r.status, Status::Fail | Status::ReportFail))
                .count();
            let _ = writeln!(
                out,
                "{:<26} {:<7} {:<9} {:>8} {:>7} {:>9.3}s  {}",
                c.claim_id,
                c.kind(),
                c.n_range(),
                c.records.len(),
                failed,
                c.elapsed.as_secs_f64(),
                c.verdict()
            );
        }
        for c in &self.claims {
            let asserted_failures: Vec<&Record> =
                c.records.iter().filter(|r| r.status == Status::Fail).collect();
            if c.notes.is_empty() && asserted_failures.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n[{}]", c.claim_id);
            for r in asserted_failures.iter().take(20) {
                let _ = writeln!(
                    out,
                    "  FAIL n={} index={} {}: {} < {}",
                    r.n,
                    r.index.map_or("-".into(), |i| i.to_string()),
                    r.family,
                    r.lhs,
                    r.rhs
                );
            }
            for note in &c.notes {
                let _ = writeln!(out, "  {note}");
            }
        }
        let _ = writeln!(
            out,
            "\nexit status: {}",
            if self.exit_code() == 0 { "0 (no asserted claim failed)" } else { "1 (asserted claim failed)" }
        );
        out
    }
}
