use std::fmt;

use num_complex::Complex64;

use super::model::{Assignment, Branch, ConstraintOrigin, EvalCtx, EvalOptions, IdentityDescriptor, TolKind};
use super::registry::descriptor;
use crate::error::{Error, Result};
use crate::numkernel::is_finite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    DomainRejected,
    EvalError,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DomainRejected => "domain_rejected",
            Status::EvalError => "eval_error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking one identity at one parameter assignment.
///
/// `lhs`, `rhs` and the errors are absent when the sides were not evaluated.
/// Points outside a stated constraint are still evaluated when the engine
/// supports them; such records are `DomainRejected` and carry the comparison
/// as evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub id: String,
    pub assignment: Assignment,
    pub lhs: Option<Complex64>,
    pub rhs: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: Status,
    pub tol: f64,
    pub tol_kind: TolKind,
    /// Inner-log reading, for identities that depend on one.
    pub branch: Option<Branch>,
    pub violated: Vec<String>,
    pub method_notes: Vec<String>,
    pub error: Option<String>,
}

impl VerificationRecord {
    /// Whether the comparison met the tolerance, regardless of status.
    pub fn within_tol(&self) -> bool {
        let err = match self.tol_kind {
            TolKind::Relative => self.rel_err,
            TolKind::Absolute => self.abs_err,
        };
        err.is_some_and(|e| e <= self.tol)
    }
}

/// `|lhs - rhs| / (1 + max(|lhs|, |rhs|))`.
pub fn relative_discrepancy(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs - rhs).norm();
    (abs, abs / (1.0 + lhs.norm().max(rhs.norm())))
}

/// Verifies `id` with default evaluation options.
pub fn verify(id: &str, assignment: &Assignment, tol: f64) -> Result<VerificationRecord> {
    verify_with(descriptor(id)?, assignment, tol, &EvalOptions::default())
}

/// Evaluates both sides and classifies the outcome.
///
/// Errors only for a malformed assignment or a non-positive `tol`; every
/// numerical failure becomes part of the record.
pub fn verify_with(
    desc: &IdentityDescriptor,
    assignment: &Assignment,
    tol: f64,
    opts: &EvalOptions,
) -> Result<VerificationRecord> {
    if !(tol > 0.0) {
        return Err(Error::InvalidConfig(format!("tol must be positive, got {tol}")));
    }
    desc.check_assignment(assignment)?;

    let mut record = VerificationRecord {
        id: desc.id.to_string(),
        assignment: assignment.clone(),
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        status: Status::DomainRejected,
        tol,
        tol_kind: desc.tol_kind,
        branch: desc.branch_sensitive.then_some(opts.branch),
        violated: Vec::new(),
        method_notes: Vec::new(),
        error: None,
    };

    let engine = desc.violated(assignment, ConstraintOrigin::Engine);
    let stated = desc.violated(assignment, ConstraintOrigin::Stated);
    record.violated = stated.iter().chain(&engine).map(|s| s.to_string()).collect();
    if !engine.is_empty() {
        return Ok(record);
    }

    let mut ctx = EvalCtx::new(*opts);
    let sides = desc.lhs(assignment, &mut ctx).and_then(|l| Ok((l, desc.rhs(assignment, &mut ctx)?)));
    record.method_notes = ctx.notes;
    let (lhs, rhs) = match sides {
        Ok(pair) => pair,
        Err(Error::Divergent(msg)) => {
            record.violated.push(format!("convergence: {msg}"));
            return Ok(record);
        }
        Err(e) => {
            record.status = if stated.is_empty() { Status::EvalError } else { Status::DomainRejected };
            record.error = Some(e.to_string());
            return Ok(record);
        }
    };
    if !is_finite(lhs) || !is_finite(rhs) {
        record.status = if stated.is_empty() { Status::EvalError } else { Status::DomainRejected };
        record.error = Some(format!("non-finite side: lhs = {lhs}, rhs = {rhs}"));
        return Ok(record);
    }

    let (abs_err, rel_err) = relative_discrepancy(lhs, rhs);
    record.lhs = Some(lhs);
    record.rhs = Some(rhs);
    record.abs_err = Some(abs_err);
    record.rel_err = Some(rel_err);
    record.status = if !stated.is_empty() {
        let verdict = if record.within_tol() { "holds" } else { "fails" };
        record.method_notes.push(format!("probe outside stated region: identity {verdict}"));
        Status::DomainRejected
    } else if record.within_tol() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(record)
}
