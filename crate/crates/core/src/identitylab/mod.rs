//! Numerical verification of finite and infinite series identities
//! involving `Phi`, and integrals that reduce to known constants.
//!
//! Every identity is a descriptor with evaluators for both sides. A
//! verification never fails on numerical trouble: poles, divergence and
//! non-convergence are recorded in the result.

mod model;
mod registry;
mod report;
mod section2;
mod section3;
mod section4;
mod sweep;
mod verify;


pub use model::{
    Assignment, Branch, Constraint, ConstraintOrigin, EvalCtx, EvalOptions, IdentityDescriptor, LhsKind, ParamKind,
    RhsKind, SideFn, TolKind,
};
pub use registry::{descriptor, list_identities};
pub use report::{record_json, summary_json, ReportWriter};
pub use section3::growth_ratio;
pub use section4::PHI_INTEGRAL_POINTS;
pub use sweep::{sweep, sweep_collect, SweepGrid, SweepSummary};
pub use verify::{relative_discrepancy, verify, verify_with, Status, VerificationRecord};

use num_complex::Complex64;

use crate::error::Result;

/// Left side of `id` at `assignment`, with default options.
pub fn lhs(id: &str, assignment: &Assignment) -> Result<Complex64> {
    let desc = descriptor(id)?;
    desc.check_assignment(assignment)?;
    desc.lhs(assignment, &mut EvalCtx::new(EvalOptions::default()))
}

/// Right side of `id` at `assignment`, with default options.
pub fn rhs(id: &str, assignment: &Assignment) -> Result<Complex64> {
    let desc = descriptor(id)?;
    desc.check_assignment(assignment)?;
    desc.rhs(assignment, &mut EvalCtx::new(EvalOptions::default()))
}

/// Builds an assignment from `(name, value)` pairs.
pub fn assignment<I, S, V>(pairs: I) -> Assignment
where
    I: IntoIterator<Item = (S, V)>,
    S: Into<String>,
    V: Into<Complex64>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v.into())).collect()
}
