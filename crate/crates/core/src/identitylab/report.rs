//! JSON-lines discrepancy reports.

use std::io::Write;

use num_complex::Complex64;
use serde_json::{json, Value};

use super::sweep::SweepSummary;
use super::verify::VerificationRecord;
use crate::error::{Error, Result};

fn pair(v: Complex64) -> Value {
    json!([v.re, v.im])
}

/// One record as a JSON object. Missing values are `null`.
pub fn record_json(r: &VerificationRecord) -> Value {
    let params: serde_json::Map<String, Value> = r.assignment.iter().map(|(k, &v)| (k.clone(), pair(v))).collect();
    json!({
        "type": "record",
        "id": r.id,
        "params": params,
        "lhs": r.lhs.map(pair),
        "rhs": r.rhs.map(pair),
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "status": r.status.name(),
        "tol": r.tol,
        "branch": r.branch.map(|b| b.name()),
        "violated": r.violated,
        "method_notes": r.method_notes,
        "error": r.error,
    })
}

pub fn summary_json(s: &SweepSummary) -> Value {
    json!({
        "type": "summary",
        "id": s.id,
        "records": s.records,
        "pass": s.pass,
        "fail": s.fail,
        "domain_rejected": s.domain_rejected,
        "eval_error": s.eval_error,
        "max_rel_err_pass": s.max_rel_err_pass,
        "max_rel_err": s.max_rel_err,
        "failures": s.failures,
        "errors": s.errors,
        "branch_convention": s.branch_convention,
        "canonical_branch": s.canonical_branch.map(|b| b.name()),
        "matching_branches": s.matching_branches.iter().map(|b| b.name()).collect::<Vec<_>>(),
    })
}

/// Writes one JSON object per line, flushing nothing until asked.
pub struct ReportWriter<W: Write> {
    out: W,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W) -> Self {
        Self { out }
    }

    fn line(&mut self, v: &Value) -> Result<()> {
        serde_json::to_writer(&mut self.out, v).map_err(|e| Error::Io(e.to_string()))?;
        self.out.write_all(b"\n").map_err(|e| Error::Io(e.to_string()))
    }

    pub fn record(&mut self, r: &VerificationRecord) -> Result<()> {
        self.line(&record_json(r))
    }

    pub fn summary(&mut self, s: &SweepSummary) -> Result<()> {
        self.line(&summary_json(s))
    }

    pub fn flush(&mut self) -> Result<()> {
        self.out.flush().map_err(|e| Error::Io(e.to_string()))
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
