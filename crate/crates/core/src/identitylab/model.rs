use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lerch::{phi, EvalConfig, PhiResult};

/// Parameter values keyed by name.
pub type Assignment = BTreeMap<String, Complex64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Complex,
    Real,
    /// A non-negative integer order such as `n`.
    PositiveInteger,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Complex => "complex",
            ParamKind::Real => "real",
            ParamKind::PositiveInteger => "positive-integer",
        }
    }

    pub fn admits(self, v: Complex64) -> bool {
        let finite = v.re.is_finite() && v.im.is_finite();
        match self {
            ParamKind::Complex => finite,
            ParamKind::Real => finite && v.im == 0.0,
            ParamKind::PositiveInteger => {
                finite && v.im == 0.0 && v.re >= 0.0 && v.re.fract() == 0.0 && v.re <= 1e6
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LhsKind {
    DoubleSum,
    InfiniteSeries,
    Integral,
}

impl LhsKind {
    pub fn name(self) -> &'static str {
        match self {
            LhsKind::DoubleSum => "double_sum",
            LhsKind::InfiniteSeries => "infinite_series",
            LhsKind::Integral => "integral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RhsKind {
    PhiCombination,
    ElementaryClosedForm,
    ConstantExpression,
    PhiIntegral,
}

impl RhsKind {
    pub fn name(self) -> &'static str {
        match self {
            RhsKind::PhiCombination => "phi_combination",
            RhsKind::ElementaryClosedForm => "elementary_closed_form",
            RhsKind::ConstantExpression => "constant_expression",
            RhsKind::PhiIntegral => "phi_integral",
        }
    }
}

/// Where a constraint comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintOrigin {
    /// Printed next to the identity; the text is kept verbatim.
    Stated,
    /// Needed by the evaluators (convergence, poles, supported domain).
    Engine,
}

impl ConstraintOrigin {
    pub fn name(self) -> &'static str {
        match self {
            ConstraintOrigin::Stated => "stated",
            ConstraintOrigin::Engine => "engine",
        }
    }
}

#[derive(Clone, Copy)]
pub struct Constraint {
    pub text: &'static str,
    pub origin: ConstraintOrigin,
    pub check: fn(&Assignment) -> bool,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Constraint").field("text", &self.text).field("origin", &self.origin).finish()
    }
}

/// How `tol` is compared against the discrepancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TolKind {
    Relative,
    Absolute,
}

/// Inner-logarithm reading for the log-log integrals: `log(-x)` as
/// `ln x + i pi` (plus) or `ln x - i pi` (minus), and likewise `log(ix)`
/// as `ln x +- i pi/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::Plus, Branch::Minus];
    /// The reading that follows the principal branch.
    pub const CANONICAL: Branch = Branch::Plus;

    pub fn name(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Branch::Plus),
            "minus" => Ok(Branch::Minus),
            other => Err(Error::InvalidConfig(format!("branch must be plus or minus, got '{other}'"))),
        }
    }
}

/// Settings shared by every evaluation in a verification run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub phi: EvalConfig,
    pub branch: Branch,
    /// Tolerance handed to the adaptive quadrature rules.
    pub quad_tol: f64,
    /// Sum infinite series to exactly this many terms instead of adaptively.
    pub fixed_terms: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { phi: EvalConfig::default(), branch: Branch::CANONICAL, quad_tol: 1e-12, fixed_terms: None }
    }
}

/// Per-evaluation state: options plus notes on the methods used.
#[derive(Debug, Clone)]
pub struct EvalCtx {
    pub opts: EvalOptions,
    pub notes: Vec<String>,
}

impl EvalCtx {
    pub fn new(opts: EvalOptions) -> Self {
        Self { opts, notes: Vec::new() }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    /// `Phi` with the context configuration, noting the method used.
    pub fn phi(&mut self, z: Complex64, s: Complex64, a: Complex64) -> Result<Complex64> {
        let r: PhiResult = phi(z, s, a, &self.opts.phi)?;
        self.note(format!("phi:{}/{}", r.method.name(), r.scheme.name()));
        Ok(r.value)
    }
}

pub type SideFn = fn(&Assignment, &mut EvalCtx) -> Result<Complex64>;

/// Static metadata and evaluators for one identity.
#[derive(Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: &'static [(&'static str, ParamKind)],
    pub constraints: Vec<Constraint>,
    pub lhs_kind: LhsKind,
    pub rhs_kind: RhsKind,
    pub default_tol: f64,
    pub tol_kind: TolKind,
    /// Smallest order `n` at which the identity is meaningful.
    pub min_order: u32,
    /// Whether records carry an inner-log branch reading.
    pub branch_sensitive: bool,
    pub notes: &'static [&'static str],
    pub(crate) lhs: SideFn,
    pub(crate) rhs: SideFn,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("params", &self.params)
            .field("constraints", &self.constraints)
            .field("lhs_kind", &self.lhs_kind)
            .field("rhs_kind", &self.rhs_kind)
            .finish()
    }
}

impl IdentityDescriptor {
    pub fn param_kind(&self, name: &str) -> Option<ParamKind> {
        self.params.iter().find(|(n, _)| *n == name).map(|&(_, k)| k)
    }

    /// Checks names and kinds, not constraints. Unknown or missing names
    /// and values of the wrong kind are malformed.
    pub fn check_assignment(&self, assignment: &Assignment) -> Result<()> {
        for name in assignment.keys() {
            if self.param_kind(name).is_none() {
                return Err(Error::MalformedAssignment(format!(
                    "{} has no parameter '{name}' (expected {})",
                    self.id,
                    self.param_names().join(", ")
                )));
            }
        }
        for &(name, kind) in self.params {
            match assignment.get(name) {
                None => {
                    return Err(Error::MalformedAssignment(format!("{}: missing parameter '{name}'", self.id)))
                }
                Some(&v) if !kind.admits(v) => {
                    return Err(Error::MalformedAssignment(format!(
                        "{}: '{name}' must be {}, got {v}",
                        self.id,
                        kind.name()
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|&(n, _)| n).collect()
    }

    pub fn violated(&self, assignment: &Assignment, origin: ConstraintOrigin) -> Vec<&'static str> {
        self.constraints
            .iter()
            .filter(|c| c.origin == origin && !(c.check)(assignment))
            .map(|c| c.text)
            .collect()
    }

    pub fn lhs(&self, assignment: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
        (self.lhs)(assignment, ctx)
    }

    pub fn rhs(&self, assignment: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
        (self.rhs)(assignment, ctx)
    }
}

/// Reads a parameter the evaluator knows is present.
pub(crate) fn get(p: &Assignment, name: &str) -> Complex64 {
    p.get(name).copied().unwrap_or_else(|| panic!("parameter '{name}' checked before evaluation"))
}

pub(crate) fn order(p: &Assignment) -> u64 {
    get(p, "n").re as u64
}
