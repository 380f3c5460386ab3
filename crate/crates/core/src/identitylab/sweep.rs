//! Grids of parameter assignments and batch verification.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::model::{Assignment, Branch, EvalOptions, IdentityDescriptor, ParamKind};
use super::verify::{verify_with, Status, VerificationRecord};
use crate::error::{Error, Result};

/// Grid points evaluated per parallel batch before they are streamed out.
const BATCH: usize = 64;
/// Margin kept between a sampled `a` and the integers.
const LATTICE_MARGIN: f64 = 0.1;

/// A cartesian product of per-parameter values, with random fill-in for
/// the parameters not listed.
///
/// Each product point is completed `samples` times with values drawn inside
/// the stated region, and `probes` more times just outside it. `extra` holds
/// complete assignments appended after the product.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub axes: BTreeMap<String, Vec<Complex64>>,
    pub samples: usize,
    pub probes: usize,
    pub seed: u64,
    pub extra: Vec<Assignment>,
    /// Inner-log readings to try, for identities that depend on one.
    pub branches: Vec<Branch>,
}

impl Default for SweepGrid {
    fn default() -> Self {
        Self { axes: BTreeMap::new(), samples: 1, probes: 0, seed: 0, extra: Vec::new(), branches: vec![Branch::CANONICAL] }
    }
}

fn parse_value(text: &str) -> Result<Complex64> {
    let bad = || Error::MalformedGrid(format!("'{text}' is not a number or 're,im' pair"));
    let mut parts = text.split(',');
    let re = parts.next().ok_or_else(bad)?.trim().parse::<f64>().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(p) => p.trim().parse::<f64>().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn parse_values(text: &str) -> Result<Vec<Complex64>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let bad = || Error::MalformedGrid(format!("'{text}' is not an integer range lo..hi"));
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).map(|v| Complex64::new(v as f64, 0.0)).collect());
    }
    text.split('|').map(parse_value).collect()
}

impl SweepGrid {
    /// Parses `name=values;...` where values are `lo..hi` (integers,
    /// inclusive) or `v1|v2|...` with each `v` real or `re,im`. The keys
    /// `samples`, `probes` and `seed` set the counts.
    pub fn parse(text: &str) -> Result<Self> {
        let mut grid = SweepGrid::default();
        for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::MalformedGrid(format!("'{item}' is not name=values")))?;
            let (key, value) = (key.trim(), value.trim());
            let count = || value.parse::<u64>().map_err(|_| Error::MalformedGrid(format!("{key} needs an integer")));
            match key {
                "samples" => grid.samples = count()? as usize,
                "probes" => grid.probes = count()? as usize,
                "seed" => grid.seed = count()?,
                "" => return Err(Error::MalformedGrid(format!("'{item}' has an empty name"))),
                _ => {
                    let values = parse_values(value)?;
                    if values.is_empty() {
                        return Err(Error::MalformedGrid(format!("{key} has no values")));
                    }
                    grid.axes.insert(key.to_string(), values);
                }
            }
        }
        Ok(grid)
    }

    /// The default grid used by sweeps that give none.
    pub fn default_for(desc: &IdentityDescriptor) -> Self {
        let mut grid = SweepGrid { seed: 20240601, ..SweepGrid::default() };
        if desc.branch_sensitive {
            grid.branches = Branch::ALL.to_vec();
        }
        let real = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>();
        match desc.id {
            "ex3_1" | "ex3_2" => {
                grid.axes.insert("y".into(), real(&[0.8, 1.5, 2.0]));
                grid.axes.insert("a".into(), real(&[0.3, 0.5]));
            }
            "ex3_3" | "ex3_4" | "ex3_5" => {
                grid.axes.insert("y".into(), real(&[0.8, 1.5, 2.0]));
                grid.axes.insert("a".into(), real(&[0.3, 0.5]));
                grid.axes.insert("b".into(), real(&[0.25, 1.4]));
            }
            "ex4_1" | "ex4_2" | "ex4_3" => {}
            "ex4_4" => {
                grid.samples = 0;
                let point = |n: f64, m: f64, a: Complex64, k: Complex64, u: f64| {
                    [("n", n.into()), ("m", m.into()), ("a", a), ("k", k), ("u", u.into())]
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v))
                        .collect::<Assignment>()
                };
                let c = Complex64::new;
                grid.extra = vec![
                    point(0.0, 0.7, c(3.5, 0.0), c(2.0, 0.0), 2.0),
                    point(1.0, 0.7, c(3.5, 0.0), c(2.0, 0.0), 2.0),
                    point(2.0, 1.3, c(4.2, 0.0), c(3.0, 0.0), 3.0),
                    point(1.0, 2.1, c(3.3, 0.0), c(2.5, 0.3), 2.5),
                ];
            }
            _ => {
                let lo = desc.min_order as f64;
                grid.axes.insert("n".into(), (lo as i64..=4).map(|v| Complex64::new(v as f64, 0.0)).collect());
                grid.samples = 5;
                if matches!(desc.id, "ex2_7" | "ex2_12") {
                    grid.probes = 2;
                }
            }
        }
        grid
    }

    /// Expands the grid into complete assignments, deterministically.
    pub fn points(&self, desc: &IdentityDescriptor) -> Result<Vec<Assignment>> {
        for name in self.axes.keys() {
            if desc.param_kind(name).is_none() {
                return Err(Error::MalformedGrid(format!("{} has no parameter '{name}'", desc.id)));
            }
        }
        let mut product: Vec<Assignment> = vec![Assignment::new()];
        for (name, values) in &self.axes {
            product = product
                .into_iter()
                .flat_map(|p| {
                    values.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.insert(name.clone(), v);
                        q
                    })
                })
                .collect();
        }
        let complete = desc.params.iter().all(|(n, _)| self.axes.contains_key(*n));
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::new();
        if complete {
            out.extend(product);
        } else {
            for base in &product {
                for _ in 0..self.samples {
                    out.push(fill(desc, base, &mut rng, false));
                }
                for _ in 0..self.probes {
                    out.push(fill(desc, base, &mut rng, true));
                }
            }
        }
        out.extend(self.extra.iter().cloned());
        if out.is_empty() {
            return Err(Error::MalformedGrid(format!("grid for {} has no points", desc.id)));
        }
        Ok(out)
    }
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

fn cplx(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> Complex64 {
    Complex64::new(uniform(rng, re.0, re.1), uniform(rng, im.0, im.1))
}

/// Draws `a` until it keeps `LATTICE_MARGIN` from the integers.
fn off_lattice(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> Complex64 {
    loop {
        let a = cplx(rng, re, im);
        if a.im.abs() >= LATTICE_MARGIN || (a.re - a.re.round()).abs() >= LATTICE_MARGIN {
            return a;
        }
    }
}

/// Random value for parameter `name`; `outside` asks for the just-outside
/// region of identities sampled on both sides of a stated bound.
fn sample_param(id: &str, name: &str, n: f64, rng: &mut ChaCha8Rng, outside: bool) -> Complex64 {
    match (id, name) {
        ("ex4_4", "m") | ("ex2_1", "m") => uniform(rng, 0.2, 2.8).into(),
        ("ex2_1", "k") | ("ex4_4", "k") => cplx(rng, (1.5, 3.5), (-1.0, 1.0)),
        ("ex4_4", "u") => uniform(rng, n.max(1.0) + 0.2, n.max(1.0) + 2.5).into(),
        ("ex4_4", "a") => cplx(rng, (PI.max(n + 1.0) + 0.3, PI.max(n + 1.0) + 3.0), (-0.5, 0.5)),
        ("ex4_4", "n") => (rng.gen_range(0..=3) as f64).into(),
        (_, "n") => (rng.gen_range(1..=4) as f64).into(),
        (_, "s") => cplx(rng, (1.2, 3.5), (-1.0, 1.0)),
        ("ex2_4" | "ex2_10", "z") => cplx(rng, (-1.5, -0.2), (-1.0, 1.0)),
        ("ex2_5", "z") => cplx(rng, (0.2, 2.8), (0.0, 0.5)),
        (_, "z") => cplx(rng, (0.2, 1.5), (-1.0, 1.0)),
        ("ex2_3" | "ex2_4", "a") => off_lattice(rng, (-4.0, 4.0), (0.0, 2.0)),
        ("ex2_6", "a") => off_lattice(rng, (-4.0, 0.0), (-2.0, 2.0)),
        ("ex2_7", "a") if outside => off_lattice(rng, (2.0 * PI, 2.0 * PI + 3.0), (-2.0, 2.0)),
        ("ex2_7", "a") => off_lattice(rng, (-4.0, 2.0 * PI), (-2.0, 2.0)),
        ("ex2_12", "a") if outside => off_lattice(rng, (-PI, 3.0), (-2.0, 2.0)),
        ("ex2_8" | "ex2_12" | "ex2_13", "a") => off_lattice(rng, (-7.0, -PI), (-2.0, 2.0)),
        (_, "y") => cplx(rng, (0.6, 3.0), (-0.3, 0.3)),
        (id, "a") if id.starts_with("ex3") => cplx(rng, (0.1, 0.7), (-0.1, 0.1)),
        (_, "b") => cplx(rng, (0.05, 2.95), (-0.5, 0.5)),
        (_, "a") => off_lattice(rng, (-4.0, 4.0), (-2.0, 2.0)),
        _ => uniform(rng, 0.5, 2.0).into(),
    }
}

fn fill(desc: &IdentityDescriptor, base: &Assignment, rng: &mut ChaCha8Rng, outside: bool) -> Assignment {
    let mut p = base.clone();
    // the order comes first so other ranges may depend on it
    if desc.param_kind("n").is_some() && !p.contains_key("n") {
        let n = sample_param(desc.id, "n", 0.0, rng, outside);
        p.insert("n".into(), n);
    }
    let n = p.get("n").map_or(0.0, |v| v.re);
    for &(name, kind) in desc.params {
        if p.contains_key(name) {
            continue;
        }
        let mut v = sample_param(desc.id, name, n, rng, outside);
        if kind == ParamKind::Real {
            v.im = 0.0;
        }
        p.insert(name.to_string(), v);
    }
    p
}

/// Counts and extremes over one identity's records.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub id: String,
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub domain_rejected: usize,
    pub eval_error: usize,
    /// Largest `rel_err` among passing records.
    pub max_rel_err_pass: Option<f64>,
    /// Largest `rel_err` among records with status `pass` or `fail`.
    pub max_rel_err: Option<f64>,
    /// Grid indices of failing records.
    pub failures: Vec<usize>,
    /// Grid indices of evaluation errors.
    pub errors: Vec<usize>,
    pub branch_convention: String,
    /// Readings under which every evaluated record passed, for
    /// branch-dependent identities.
    pub matching_branches: Vec<Branch>,
    pub canonical_branch: Option<Branch>,
}

impl SweepSummary {
    fn new(desc: &IdentityDescriptor) -> Self {
        Self {
            id: desc.id.to_string(),
            records: 0,
            pass: 0,
            fail: 0,
            domain_rejected: 0,
            eval_error: 0,
            max_rel_err_pass: None,
            max_rel_err: None,
            failures: Vec::new(),
            errors: Vec::new(),
            branch_convention: if desc.branch_sensitive {
                "inner-log reading per record; plus is canonical".into()
            } else {
                "principal branch".into()
            },
            matching_branches: Vec::new(),
            canonical_branch: desc.branch_sensitive.then_some(Branch::CANONICAL),
        }
    }

    fn add(&mut self, index: usize, r: &VerificationRecord) {
        self.records += 1;
        let bump = |slot: &mut Option<f64>, v: Option<f64>| {
            if let Some(v) = v {
                *slot = Some(slot.map_or(v, |m: f64| m.max(v)));
            }
        };
        match r.status {
            Status::Pass => {
                self.pass += 1;
                bump(&mut self.max_rel_err_pass, r.rel_err);
                bump(&mut self.max_rel_err, r.rel_err);
            }
            Status::Fail => {
                self.fail += 1;
                self.failures.push(index);
                bump(&mut self.max_rel_err, r.rel_err);
            }
            Status::DomainRejected => self.domain_rejected += 1,
            Status::EvalError => {
                self.eval_error += 1;
                self.errors.push(index);
            }
        }
    }

    /// True when every in-domain point passed.
    pub fn all_pass(&self) -> bool {
        self.fail == 0 && self.eval_error == 0
    }
}

/// Verifies every grid point, streaming records to `sink` in grid order.
///
/// Points are evaluated in parallel batches; output order depends only on
/// the grid. Branch-dependent identities are evaluated once per reading in
/// `grid.branches`.
pub fn sweep<F>(
    desc: &IdentityDescriptor,
    grid: &SweepGrid,
    tol: f64,
    opts: &EvalOptions,
    mut sink: F,
) -> Result<SweepSummary>
where
    F: FnMut(usize, &VerificationRecord) -> Result<()>,
{
    let points = grid.points(desc)?;
    let branches: Vec<Branch> = if desc.branch_sensitive {
        if grid.branches.is_empty() {
            vec![opts.branch]
        } else {
            grid.branches.clone()
        }
    } else {
        vec![opts.branch]
    };
    let jobs: Vec<(&Assignment, Branch)> =
        points.iter().flat_map(|p| branches.iter().map(move |&b| (p, b))).collect();

    let mut summary = SweepSummary::new(desc);
    let mut branch_ok: BTreeMap<&'static str, (Branch, bool)> =
        branches.iter().map(|&b| (b.name(), (b, true))).collect();
    for (batch_no, batch) in jobs.chunks(BATCH).enumerate() {
        let records: Vec<Result<VerificationRecord>> = batch
            .par_iter()
            .map(|&(p, branch)| verify_with(desc, p, tol, &EvalOptions { branch, ..*opts }))
            .collect();
        for (offset, record) in records.into_iter().enumerate() {
            let index = batch_no * BATCH + offset;
            let record = record?;
            summary.add(index, &record);
            if let Some(b) = record.branch {
                if let Some(entry) = branch_ok.get_mut(b.name()) {
                    entry.1 &= record.status == Status::Pass;
                }
            }
            sink(index, &record)?;
        }
    }
    if desc.branch_sensitive {
        summary.matching_branches =
            Branch::ALL.into_iter().filter(|b| branch_ok.get(b.name()).is_some_and(|e| e.1)).collect();
    }
    Ok(summary)
}

/// `sweep` collecting the records in memory.
pub fn sweep_collect(
    desc: &IdentityDescriptor,
    grid: &SweepGrid,
    tol: f64,
    opts: &EvalOptions,
) -> Result<(Vec<VerificationRecord>, SweepSummary)> {
    let mut records = Vec::new();
    let summary = sweep(desc, grid, tol, opts, |_, r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok((records, summary))
}
