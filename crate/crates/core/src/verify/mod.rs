//! Seeded randomized sweeps over every identity the crate implements.
//!
//! Each check draws its samples from a ChaCha8 stream keyed by the run seed
//! and the check id, positioned by sample index. A sample's inputs therefore
//! do not depend on scheduling, and with the order-independent max/min
//! reduction the report is identical whether the sweep runs on one thread or
//! many.

mod cl03;
mod core;
mod dirac;
mod paravector;
mod rep;
pub mod sample;
mod weyl;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Rep,
    Weyl,
    Dirac,
    Paravector,
    Cl03,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Core, Suite::Rep, Suite::Weyl, Suite::Dirac, Suite::Paravector, Suite::Cl03];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Rep => "rep",
            Suite::Weyl => "weyl",
            Suite::Dirac => "dirac",
            Suite::Paravector => "paravector",
            Suite::Cl03 => "cl03",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>, UnknownSuite> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}; expected one of core, rep, weyl, dirac, paravector, cl03, all", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Deliberate defects for exercising the failure path.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Flip the sign of the vector part of every boost.
    BoostSign,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    /// Data-parallel sweeps when the `parallel` feature is on.
    #[default]
    Parallel,
    Sequential,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Base sample count; rotor and momentum sweeps use fixed fractions of it.
    pub samples: usize,
    /// Per-check tolerance replacements, keyed by check id.
    pub tolerances: BTreeMap<String, f64>,
    pub fault: Option<Fault>,
    pub execution: Execution,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            tolerances: BTreeMap::new(),
            fault: None,
            execution: Execution::default(),
        }
    }
}

impl RunConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = Some(fault);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    /// `samples / div`, at least one.
    fn fraction(&self, div: usize) -> usize {
        (self.samples / div).max(1)
    }
}

/// Whether a check bounds its residual from above or below.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// pass iff `residual <= tolerance`
    Max,
    /// pass iff `residual >= tolerance` (negative controls)
    Min,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
    pub bound: Bound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub samples: usize,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl Report {
    pub fn checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks().find(|c| c.id == id)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks().filter(|c| !c.pass).collect()
    }
}

/// Runs the given suites, each once, in a fixed order.
pub fn run(cfg: &RunConfig, suites: &[Suite]) -> Report {
    let mut wanted: Vec<Suite> = suites.to_vec();
    wanted.sort();
    wanted.dedup();
    let reports: Vec<SuiteReport> = wanted.into_iter().map(|s| run_suite(cfg, s)).collect();
    Report {
        seed: cfg.seed,
        samples: cfg.samples,
        pass: reports.iter().all(|r| r.pass),
        suites: reports,
        wall_time_s: None,
    }
}

pub fn run_suite(cfg: &RunConfig, suite: Suite) -> SuiteReport {
    let mut ctx = Ctx::new(cfg);
    match suite {
        Suite::Core => core::run(&mut ctx),
        Suite::Rep => rep::run(&mut ctx),
        Suite::Weyl => weyl::run(&mut ctx),
        Suite::Dirac => dirac::run(&mut ctx),
        Suite::Paravector => paravector::run(&mut ctx),
        Suite::Cl03 => cl03::run(&mut ctx),
    }
    let mut checks = ctx.records;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport { suite, pass: checks.iter().all(|c| c.pass), checks }
}

/// Largest of two residuals; NaN wins so that it can never pass.
pub(crate) fn worst_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

pub(crate) fn worst_min(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.min(b)
    }
}

pub(crate) struct Ctx<'a> {
    pub cfg: &'a RunConfig,
    records: Vec<CheckRecord>,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        Ctx { cfg, records: Vec::new() }
    }

    /// Records the largest residual of `f` over `n` samples.
    pub fn max_check<F>(&mut self, id: &str, tol: f64, n: usize, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> f64 + Sync + Send,
    {
        let r = self.sweep(id, n, f, 0.0, worst_max);
        self.record(id, r, tol, n, Bound::Max);
    }

    /// Records the smallest value of `f` over `n` samples, which must stay
    /// at or above `threshold`.
    pub fn min_check<F>(&mut self, id: &str, threshold: f64, n: usize, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> f64 + Sync + Send,
    {
        let r = self.sweep(id, n, f, f64::INFINITY, worst_min);
        self.record(id, r, threshold, n, Bound::Min);
    }

    /// Records a residual computed without sampling.
    pub fn fixed(&mut self, id: &str, residual: f64, tol: f64, n: usize) {
        self.record(id, residual, tol, n, Bound::Max);
    }

    pub fn n(&self) -> usize {
        self.cfg.samples.max(1)
    }

    pub fn fraction(&self, div: usize) -> usize {
        self.cfg.fraction(div)
    }

    fn record(&mut self, id: &str, residual: f64, tol: f64, samples: usize, bound: Bound) {
        let tolerance = self.cfg.tolerances.get(id).copied().unwrap_or(tol);
        let pass = match bound {
            Bound::Max => residual <= tolerance,
            Bound::Min => residual >= tolerance,
        };
        self.records.push(CheckRecord { id: id.to_string(), residual, tolerance, pass, samples, bound });
    }

    fn sweep<F>(&self, id: &str, n: usize, f: F, init: f64, reduce: fn(f64, f64) -> f64) -> f64
    where
        F: Fn(&mut ChaCha8Rng) -> f64 + Sync + Send,
    {
        let seed = self.cfg.seed;
        let eval = |i: usize| f(&mut sample::sample_rng(seed, id, i as u64));
        match self.cfg.execution {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(eval).reduce(|| init, reduce)
            }
            _ => (0..n).map(eval).fold(init, reduce),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 6);
        assert!(Suite::parse_list("bogus").is_err());
    }

    #[test]
    fn nan_never_passes() {
        assert!(worst_max(0.0, f64::NAN).is_nan());
        assert!(worst_min(f64::NAN, 1.0).is_nan());
        let cfg = RunConfig::default();
        let mut ctx = Ctx::new(&cfg);
        ctx.max_check("x", 1.0, 3, |_| f64::NAN);
        ctx.min_check("y", 1.0, 3, |_| f64::NAN);
        assert!(ctx.records.iter().all(|r| !r.pass));
    }

    #[test]
    fn tolerance_override_applies() {
        let mut cfg = RunConfig::default();
        cfg.tolerances.insert("x".into(), 10.0);
        let mut ctx = Ctx::new(&cfg);
        ctx.max_check("x", 1.0, 2, |_| 5.0);
        assert!(ctx.records[0].pass);
        assert_eq!(ctx.records[0].tolerance, 10.0);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let base = RunConfig::default().with_samples(50);
        let a = run(&base.clone().with_execution(Execution::Sequential), &Suite::ALL);
        let b = run(&base.with_execution(Execution::Parallel), &Suite::ALL);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
