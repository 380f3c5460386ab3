//! The `hlz` command line: point evaluation of `Phi`, identity checks and
//! sweeps, the log integrals, and stored constants.

pub mod config;
pub mod values;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use hlz_core::identitylab::{
    descriptor, list_identities, sweep, verify_with, Assignment, Branch, ConstraintOrigin, EvalOptions,
    IdentityDescriptor, ReportWriter, Status, SweepGrid, SweepSummary, VerificationRecord,
};
use hlz_core::lerch::{phi, EvalConfig};
use hlz_core::numkernel::{constant, constant_oracle, ConstantTag};
use hlz_core::Error as CoreError;

use config::parse_config;
use values::{fmt_complex, fmt_real, parse_assignment, parse_complex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

/// Effort passed to the slow constant oracles by `constants --oracle`.
const ORACLE_EFFORT: u32 = 10;

#[derive(Debug, Parser)]
#[command(name = "hlz", version, about = "Hurwitz-Lerch zeta evaluation and identity verification")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// key=value file; flags given on the command line take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    #[arg(long, global = true)]
    accel_modulus: Option<f64>,
    #[arg(long, global = true)]
    levin_order: Option<usize>,
    /// Tolerance of the adaptive quadrature rules
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate Phi(z, s, a)
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Check one identity at one parameter assignment
    Verify {
        id: String,
        /// name=value[,name=value...]; complex values as re,im
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Check identities over parameter grids
    Sweep {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        /// name=v1|v2 or name=lo..hi, separated by ';'; also samples=, probes=, seed=
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Evaluate the integral identities and compare with their closed forms
    Integrate {
        id: String,
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Print the stored mathematical constants
    Constants {
        /// Also run the slow series oracles
        #[arg(long)]
        oracle: bool,
    },
    /// List the registered identities
    List,
}

#[derive(Debug, Args)]
struct RunOpts {
    #[arg(long)]
    tol: Option<f64>,
    /// Inner-log reading for the log integrals
    #[arg(long)]
    branch: Option<String>,
    /// JSON-lines output file
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Eval(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Eval(_) => EXIT_EVAL,
        }
    }
}

/// Library errors caused by the input are usage errors; the rest are
/// evaluation failures.
impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::UnknownIdentity(_)
            | CoreError::MalformedAssignment(_)
            | CoreError::MalformedGrid(_)
            | CoreError::InvalidConfig(_) => CliError::Usage(e.to_string()),
            other => CliError::Eval(other.to_string()),
        }
    }
}

const CONFIG_KEYS: &[&str] =
    &["rel_tol", "max_terms", "accel_modulus", "levin_order", "quad_tol", "tol", "seed", "branch"];

/// Flag values merged over the configuration file.
struct Settings {
    file: BTreeMap<String, String>,
}

impl Settings {
    fn load(path: Option<&PathBuf>) -> Result<Self, CliError> {
        let file = match path {
            Some(p) => parse_config(p).map_err(|e| CliError::Usage(e.to_string()))?,
            None => BTreeMap::new(),
        };
        if let Some(key) = file.keys().find(|k| !CONFIG_KEYS.contains(&k.as_str())) {
            return Err(CliError::Usage(format!(
                "unknown configuration key '{key}' (known: {})",
                CONFIG_KEYS.join(", ")
            )));
        }
        Ok(Self { file })
    }

    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(text) => text
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("configuration value {key}={text} is invalid"))),
        }
    }

    fn eval_options(&self, g: &GlobalOpts, branch: Option<String>) -> Result<EvalOptions, CliError> {
        let mut cfg = EvalConfig::default();
        if let Some(v) = self.pick(g.rel_tol, "rel_tol")? {
            cfg = cfg.with_rel_tol(v)?;
        }
        if let Some(v) = self.pick(g.max_terms, "max_terms")? {
            cfg = cfg.with_max_terms(v)?;
        }
        if let Some(v) = self.pick(g.accel_modulus, "accel_modulus")? {
            cfg = cfg.with_accel_modulus(v)?;
        }
        if let Some(v) = self.pick(g.levin_order, "levin_order")? {
            cfg = cfg.with_levin_order(v)?;
        }
        let mut opts = EvalOptions { phi: cfg, ..EvalOptions::default() };
        if let Some(v) = self.pick(g.quad_tol, "quad_tol")? {
            if !(v > 0.0 && v < 1.0) {
                return Err(CliError::Usage(format!("quad_tol must lie in (0, 1), got {v}")));
            }
            opts.quad_tol = v;
        }
        if let Some(b) = self.branch(branch)? {
            opts.branch = b;
        }
        Ok(opts)
    }

    fn branch(&self, flag: Option<String>) -> Result<Option<Branch>, CliError> {
        match self.pick(flag, "branch")? {
            None => Ok(None),
            Some(text) => text.parse::<Branch>().map(Some).map_err(|e| CliError::Usage(e.to_string())),
        }
    }

    fn tol(&self, flag: Option<f64>, desc: &IdentityDescriptor) -> Result<f64, CliError> {
        let tol = self.pick(flag, "tol")?.unwrap_or(desc.default_tol);
        if !(tol > 0.0) {
            return Err(CliError::Usage(format!("tol must be positive, got {tol}")));
        }
        Ok(tol)
    }
}

fn open_report(path: &Option<PathBuf>) -> Result<Option<ReportWriter<BufWriter<File>>>, CliError> {
    path.as_ref()
        .map(|p| {
            File::create(p)
                .map(|f| ReportWriter::new(BufWriter::new(f)))
                .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", p.display())))
        })
        .transpose()
}

fn io(e: std::io::Error) -> CliError {
    CliError::Eval(format!("write failed: {e}"))
}

fn parse_sets(sets: &[String]) -> Result<Assignment, CliError> {
    let mut assignment = Assignment::new();
    for s in sets {
        parse_assignment(s, &mut assignment).map_err(CliError::Usage)?;
    }
    Ok(assignment)
}

fn print_record(out: &mut dyn Write, r: &VerificationRecord) -> std::io::Result<()> {
    let params: Vec<String> = r.assignment.iter().map(|(k, v)| format!("{k}={}", fmt_complex(*v))).collect();
    writeln!(out, "id        {}", r.id)?;
    if !params.is_empty() {
        writeln!(out, "params    {}", params.join(" "))?;
    }
    if let Some(b) = r.branch {
        writeln!(out, "branch    {b}")?;
    }
    if let (Some(l), Some(rh)) = (r.lhs, r.rhs) {
        writeln!(out, "lhs       {}", fmt_complex(l))?;
        writeln!(out, "rhs       {}", fmt_complex(rh))?;
    }
    if let (Some(a), Some(rel)) = (r.abs_err, r.rel_err) {
        writeln!(out, "abs_err   {}", fmt_real(a))?;
        writeln!(out, "rel_err   {}", fmt_real(rel))?;
    }
    for v in &r.violated {
        writeln!(out, "violated  {v}")?;
    }
    if let Some(e) = &r.error {
        writeln!(out, "error     {e}")?;
    }
    if !r.method_notes.is_empty() {
        writeln!(out, "methods   {}", r.method_notes.join("; "))?;
    }
    writeln!(out, "status    {}", r.status)
}

fn record_exit(status: Status) -> i32 {
    match status {
        Status::Pass => EXIT_OK,
        Status::Fail | Status::DomainRejected => EXIT_FAILURE,
        Status::EvalError => EXIT_EVAL,
    }
}

fn cmd_phi(out: &mut dyn Write, opts: &EvalOptions, z: &str, s: &str, a: &str) -> Result<i32, CliError> {
    let parse = |t: &str| parse_complex(t).map_err(CliError::Usage);
    let r = phi(parse(z)?, parse(s)?, parse(a)?, &opts.phi)?;
    writeln!(out, "value       {}", fmt_complex(r.value)).map_err(io)?;
    writeln!(out, "err_est     {}", fmt_real(r.err_estimate)).map_err(io)?;
    writeln!(out, "method      {}/{}", r.method.name(), r.scheme.name()).map_err(io)?;
    writeln!(out, "terms       {}", r.terms_used).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    out: &mut dyn Write,
    settings: &Settings,
    opts: &EvalOptions,
    id: &str,
    sets: &[String],
    run: &RunOpts,
) -> Result<i32, CliError> {
    let desc = descriptor(id)?;
    let assignment = parse_sets(sets)?;
    let tol = settings.tol(run.tol, desc)?;
    let mut report = open_report(&run.report)?;
    let record = verify_with(desc, &assignment, tol, opts)?;
    print_record(out, &record).map_err(io)?;
    if let Some(w) = report.as_mut() {
        w.record(&record)?;
        w.flush()?;
    }
    Ok(record_exit(record.status))
}

fn print_summary(out: &mut dyn Write, s: &SweepSummary) -> std::io::Result<()> {
    let opt = |v: Option<f64>| v.map_or("-".to_string(), fmt_real);
    write!(
        out,
        "{:<7} records={} pass={} fail={} domain_rejected={} eval_error={} max_rel_err_pass={}",
        s.id,
        s.records,
        s.pass,
        s.fail,
        s.domain_rejected,
        s.eval_error,
        opt(s.max_rel_err_pass)
    )?;
    if s.fail > 0 {
        write!(out, " max_rel_err={} branch_convention=\"{}\"", opt(s.max_rel_err), s.branch_convention)?;
    }
    if let Some(c) = s.canonical_branch {
        let matching: Vec<&str> = s.matching_branches.iter().map(|b| b.name()).collect();
        write!(out, " canonical={c} matching=[{}]", matching.join(","))?;
    }
    writeln!(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    out: &mut dyn Write,
    settings: &Settings,
    opts: &EvalOptions,
    ids: &[String],
    all: bool,
    grid: &Option<String>,
    seed: Option<u64>,
    run: &RunOpts,
) -> Result<i32, CliError> {
    let descs: Vec<&IdentityDescriptor> = match (all, ids.is_empty()) {
        (true, true) => list_identities().iter().collect(),
        (false, false) => ids.iter().map(|id| descriptor(id)).collect::<Result<_, _>>()?,
        (true, false) => return Err(CliError::Usage("give identity ids or --all, not both".into())),
        (false, true) => return Err(CliError::Usage("sweep needs identity ids or --all".into())),
    };
    let parsed = grid.as_deref().map(SweepGrid::parse).transpose()?;
    let seed = settings.pick(seed, "seed")?;
    let branch = settings.branch(run.branch.clone())?;
    let mut report = open_report(&run.report)?;

    let (mut failed, mut errored) = (false, false);
    for desc in descs {
        let mut g = match &parsed {
            Some(g) => {
                let mut g = g.clone();
                if desc.branch_sensitive {
                    g.branches = Branch::ALL.to_vec();
                }
                g
            }
            None => SweepGrid::default_for(desc),
        };
        if let Some(seed) = seed {
            g.seed = seed;
        }
        if let Some(b) = branch {
            g.branches = vec![b];
        }
        let tol = settings.tol(run.tol, desc)?;
        let summary = sweep(desc, &g, tol, opts, |_, r| match report.as_mut() {
            Some(w) => w.record(r),
            None => Ok(()),
        })?;
        if let Some(w) = report.as_mut() {
            w.summary(&summary)?;
        }
        print_summary(out, &summary).map_err(io)?;
        failed |= summary.fail > 0;
        errored |= summary.eval_error > 0;
    }
    if let Some(w) = report.as_mut() {
        w.flush()?;
    }
    Ok(if failed {
        EXIT_FAILURE
    } else if errored {
        EXIT_EVAL
    } else {
        EXIT_OK
    })
}

fn cmd_integrate(
    out: &mut dyn Write,
    settings: &Settings,
    opts: &EvalOptions,
    id: &str,
    sets: &[String],
    run: &RunOpts,
) -> Result<i32, CliError> {
    let desc = descriptor(id)?;
    if !id.starts_with("ex4_") {
        return Err(CliError::Usage(format!("{id} is not an integral identity (ex4_1 ... ex4_4)")));
    }
    let assignment = parse_sets(sets)?;
    let tol = settings.tol(run.tol, desc)?;
    let branches: Vec<Branch> = match settings.branch(run.branch.clone())? {
        Some(b) => vec![b],
        None if desc.branch_sensitive => Branch::ALL.to_vec(),
        None => vec![opts.branch],
    };
    let mut report = open_report(&run.report)?;
    let mut codes = Vec::new();
    for (i, &branch) in branches.iter().enumerate() {
        if i > 0 {
            writeln!(out).map_err(io)?;
        }
        let record = verify_with(desc, &assignment, tol, &EvalOptions { branch, ..*opts })?;
        print_record(out, &record).map_err(io)?;
        if let Some(w) = report.as_mut() {
            w.record(&record)?;
        }
        codes.push(record_exit(record.status));
    }
    if let Some(w) = report.as_mut() {
        w.flush()?;
    }
    // one matching reading is enough when several were tried
    Ok(if codes.contains(&EXIT_OK) {
        EXIT_OK
    } else if codes.contains(&EXIT_FAILURE) {
        EXIT_FAILURE
    } else {
        EXIT_EVAL
    })
}

fn cmd_constants(out: &mut dyn Write, oracle: bool) -> Result<i32, CliError> {
    for tag in ConstantTag::ALL {
        let value = constant(tag);
        write!(out, "{:<12} {}  digits={}", tag.name(), fmt_real(value), tag.digits()).map_err(io)?;
        if oracle {
            let slow = constant_oracle(tag, ORACLE_EFFORT);
            write!(out, "  oracle={}  diff={}", fmt_real(slow), fmt_real((slow - value).abs())).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_list(out: &mut dyn Write) -> Result<i32, CliError> {
    for d in list_identities() {
        let params: Vec<String> = d.params.iter().map(|(n, k)| format!("{n}:{}", k.name())).collect();
        writeln!(out, "{:<7} {:<16} {:<22} {}", d.id, d.lhs_kind.name(), d.rhs_kind.name(), d.anchor).map_err(io)?;
        if !params.is_empty() {
            writeln!(out, "        params: {}", params.join(", ")).map_err(io)?;
        }
        for origin in [ConstraintOrigin::Stated, ConstraintOrigin::Engine] {
            for c in d.constraints.iter().filter(|c| c.origin == origin) {
                writeln!(out, "        {}: {}", origin.name(), c.text).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let settings = Settings::load(cli.global.config.as_ref())?;
    let branch_flag = match &cli.command {
        Command::Verify { run, .. } | Command::Sweep { run, .. } | Command::Integrate { run, .. } => {
            run.branch.clone()
        }
        _ => None,
    };
    let opts = settings.eval_options(&cli.global, branch_flag)?;
    match &cli.command {
        Command::Phi { z, s, a } => cmd_phi(out, &opts, z, s, a),
        Command::Verify { id, set, run } => cmd_verify(out, &settings, &opts, id, set, run),
        Command::Sweep { ids, all, grid, seed, run } => cmd_sweep(out, &settings, &opts, ids, *all, grid, *seed, run),
        Command::Integrate { id, set, run } => cmd_integrate(out, &settings, &opts, id, set, run),
        Command::Constants { oracle } => cmd_constants(out, *oracle),
        Command::List => cmd_list(out),
    }
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 when an identity fails, 2 on usage errors, 3 on evaluation errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hlz: {e}");
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hlz").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn phi_at_zero_argument() {
        let (code, out, _) = run_str(&["phi", "--z", "0,0", "--s", "2,0", "--a", "1.5,0"]);
        assert_eq!(code, EXIT_OK);
        let value = out.lines().next().unwrap().split_whitespace().nth(1).unwrap();
        let v = parse_complex(value).unwrap();
        assert_eq!(v.re, 1.0 / 2.25);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn negative_values_are_accepted() {
        let (code, out, err) = run_str(&["phi", "--z", "-0.5,0.2", "--s", "-1.5", "--a", "0.7,-1"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.starts_with("value"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["phi", "--z", "0", "--s", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["phi", "--z", "x", "--s", "2", "--a", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["list", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "ex9_1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "ex2_1", "--set", "n=0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["sweep"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "ex4_1", "--branch", "sideways"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["phi", "--z", "0", "--s", "2", "--a", "1", "--rel-tol", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn evaluation_errors() {
        let (code, _, err) = run_str(&["phi", "--z", "1", "--s", "2", "--a", "1"]);
        assert_eq!(code, EXIT_EVAL);
        assert!(err.starts_with("hlz: "));
        assert_eq!(run_str(&["phi", "--z", "0.5", "--s", "2", "--a", "-1"]).0, EXIT_EVAL);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_str(&["verify", "ex2_1", "--set", "n=0,m=0.5,a=2.3,k=2", "--tol", "1e-10"]).0, EXIT_OK);
        // ex2_4 fails at order 1
        let (code, out, _) = run_str(&["verify", "ex2_4", "--set", "n=1,z=-0.5,a=1.5,0.5,s=2"]);
        assert_eq!(code, EXIT_FAILURE, "{out}");
        assert!(out.contains("status    fail"));
        let (code, out, _) = run_str(&["verify", "ex2_12", "--set", "n=1,z=0.5,a=0.5,0.5,s=2"]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(out.contains("status    domain_rejected"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("sweep"));
    }
}
