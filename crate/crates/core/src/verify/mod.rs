//! Seeded verification suites and their reports.
//!
//! Every trial draws its inputs from its own generator, seeded from the run
//! seed and the trial index, so trials run in parallel and the report does
//! not depend on scheduling. A trial passes when every check in it passes.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{contract, usage, Error, Result};

pub mod sampling;
mod suites;

pub const TOOL_VERSION: &str = concat!("relsub ", env!("CARGO_PKG_VERSION"));

/// Failures kept in a report unless asked otherwise.
pub const DEFAULT_MAX_FAILURES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    All,
    Clifford,
    DkpAlgebra,
    Spinor,
    SplitDkp,
    SplitDirac,
    Susy,
    Majorana,
    Lorentz,
}

impl Suite {
    /// Every suite that `All` runs, in report order.
    pub const MEMBERS: [Suite; 8] = [
        Suite::Clifford,
        Suite::DkpAlgebra,
        Suite::Spinor,
        Suite::SplitDkp,
        Suite::SplitDirac,
        Suite::Susy,
        Suite::Majorana,
        Suite::Lorentz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Clifford => "clifford",
            Suite::DkpAlgebra => "dkp-algebra",
            Suite::Spinor => "spinor",
            Suite::SplitDkp => "split-dkp",
            Suite::SplitDirac => "split-dirac",
            Suite::Susy => "susy",
            Suite::Majorana => "majorana",
            Suite::Lorentz => "lorentz",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| usage(format!("unknown suite '{s}'")))
    }
}

/// How a check value is judged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Bound {
    /// At most the run tolerance.
    Tol,
    /// Exactly zero: integer arithmetic or a count mismatch.
    Zero,
    /// Strictly above a fixed separation.
    Above(f64),
}

#[derive(Debug, Clone)]
pub(crate) struct Check {
    name: String,
    value: f64,
    bound: Bound,
}

impl Check {
    fn passes(&self, tol: f64) -> bool {
        match self.bound {
            Bound::Tol => self.value <= tol,
            Bound::Zero => self.value == 0.0,
            Bound::Above(x) => self.value > x,
        }
    }

    fn is_residual(&self) -> bool {
        !matches!(self.bound, Bound::Above(_))
    }
}

/// Inputs and check values of one trial.
#[derive(Debug, Default)]
pub(crate) struct Trial {
    inputs: serde_json::Map<String, serde_json::Value>,
    checks: Vec<Check>,
}

impl Trial {
    pub(crate) fn input(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("inputs serialize");
        self.inputs.insert(key.to_owned(), v);
    }

    fn push(&mut self, name: impl Into<String>, value: f64, bound: Bound) {
        self.checks.push(Check { name: name.into(), value, bound });
    }

    pub(crate) fn tol(&mut self, name: impl Into<String>, value: f64) {
        self.push(name, value, Bound::Tol);
    }

    pub(crate) fn zero(&mut self, name: impl Into<String>, value: f64) {
        self.push(name, value, Bound::Zero);
    }

    pub(crate) fn above(&mut self, name: impl Into<String>, value: f64, limit: f64) {
        self.push(name, value, Bound::Above(limit));
    }

    /// Count mismatch as a zero check.
    pub(crate) fn count(&mut self, name: impl Into<String>, got: usize, expected: usize) {
        self.zero(name, got.abs_diff(expected) as f64);
    }

    fn digest(&self) -> String {
        let bytes = serde_json::to_vec(&self.inputs).expect("inputs serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    /// First failing check of the trial, prefixed by the suite name in
    /// aggregate reports.
    pub check: String,
    pub trial: u64,
    /// Seed of the trial's own generator.
    pub seed: u64,
    pub residual: f64,
    /// SHA-256 of the trial inputs as canonical JSON.
    pub inputs_digest: String,
    pub failed_checks: usize,
}

/// Worst value seen for one check across all trials: the largest value for
/// residual checks, the smallest for separation checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub worst: f64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub tool_version: String,
    pub seed: u64,
    pub trials: u64,
    pub tolerance: f64,
    pub passed: u64,
    pub failed: u64,
    pub max_residual: f64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<String, CheckSummary>,
    pub failures: Vec<Failure>,
    pub failures_truncated: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<SuiteReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Canonical machine-readable form: compact JSON, fixed field order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn render_into(out: &mut String, r: &SuiteReport, indent: &str) {
    let _ = writeln!(out, "{indent}suite {}  seed {}  trials {}  tol {:e}", r.suite, r.seed, r.trials, r.tolerance);
    let _ = writeln!(out, "{indent}passed {}  failed {}  max residual {:.3e}", r.passed, r.failed, r.max_residual);
    for (name, c) in &r.checks {
        let mark = if c.failures == 0 { "ok" } else { "FAIL" };
        let _ = writeln!(out, "{indent}  {name:<40} {:>11.3e}  {mark}", c.worst);
    }
    for f in &r.failures {
        let _ = writeln!(
            out,
            "{indent}  failure trial {} seed {} {} = {:.3e} inputs {}",
            f.trial, f.seed, f.check, f.residual, f.inputs_digest
        );
    }
    if r.failures_truncated {
        let _ = writeln!(out, "{indent}  (failure list truncated)");
    }
    for c in &r.components {
        render_into(out, c, &format!("{indent}  "));
    }
}

/// Human-readable rendering of a report.
pub fn render_text(r: &SuiteReport) -> String {
    let mut out = String::new();
    render_into(&mut out, r, "");
    let _ = writeln!(out, "{}", if r.ok() { "PASS" } else { "FAIL" });
    out
}

struct TrialOutcome {
    failure: Option<Failure>,
    checks: Vec<Check>,
}

fn run_trials(suite: Suite, seed: u64, trials: u64, tol: f64) -> Vec<TrialOutcome> {
    (0..trials)
        .into_par_iter()
        .map(|index| {
            let trial_seed = sampling::trial_seed(seed, index);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let mut trial = Trial::default();
            if let Err(e) = suites::run_trial(suite, &mut rng, trial_seed, tol, &mut trial) {
                trial.input("error", e.to_string());
                trial.push(format!("{}.evaluation", suite.name()), f64::INFINITY, Bound::Zero);
            }
            let failing: Vec<&Check> = trial.checks.iter().filter(|c| !c.passes(tol)).collect();
            let failure = failing.first().map(|c| Failure {
                check: c.name.clone(),
                trial: index,
                seed: trial_seed,
                residual: c.value,
                inputs_digest: trial.digest(),
                failed_checks: failing.len(),
            });
            TrialOutcome { failure, checks: trial.checks }
        })
        .collect()
}

/// Maximum that keeps NaN.
fn worse(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn summarize(outcomes: &[TrialOutcome], tol: f64) -> (f64, BTreeMap<String, CheckSummary>) {
    let mut max_residual = 0.0f64;
    let mut checks: BTreeMap<String, CheckSummary> = BTreeMap::new();
    for c in outcomes.iter().flat_map(|o| &o.checks) {
        let failed = u64::from(!c.passes(tol));
        let entry = checks.entry(c.name.clone()).or_insert(CheckSummary { worst: c.value, failures: 0 });
        entry.failures += failed;
        if c.is_residual() {
            // NaN must surface as the worst value.
            if c.value.is_nan() || c.value > entry.worst {
                entry.worst = c.value;
            }
            max_residual = worse(max_residual, c.value);
        } else if c.value.is_nan() || c.value < entry.worst {
            entry.worst = c.value;
        }
    }
    (max_residual, checks)
}

fn cap(mut failures: Vec<Failure>, max_failures: usize) -> (Vec<Failure>, bool) {
    failures.sort_by(|a, b| a.trial.cmp(&b.trial).then_with(|| a.check.cmp(&b.check)));
    let truncated = failures.len() > max_failures;
    failures.truncate(max_failures);
    (failures, truncated)
}

fn single_report(
    suite: Suite,
    seed: u64,
    trials: u64,
    tol: f64,
    max_failures: usize,
) -> (SuiteReport, Vec<Option<Failure>>) {
    let outcomes = run_trials(suite, seed, trials, tol);
    let (max_residual, checks) = summarize(&outcomes, tol);
    let per_trial: Vec<Option<Failure>> = outcomes.into_iter().map(|o| o.failure).collect();
    let failed = per_trial.iter().filter(|f| f.is_some()).count() as u64;
    let (failures, failures_truncated) = cap(per_trial.iter().flatten().cloned().collect(), max_failures);
    let report = SuiteReport {
        suite: suite.name().to_owned(),
        tool_version: TOOL_VERSION.to_owned(),
        seed,
        trials,
        tolerance: tol,
        passed: trials - failed,
        failed,
        max_residual,
        checks,
        failures,
        failures_truncated,
        components: Vec::new(),
    };
    (report, per_trial)
}

/// Runs a suite with the default failure cap.
pub fn run_suite(suite: Suite, seed: u64, trials: u64, tol: f64) -> Result<SuiteReport> {
    run_suite_with(suite, seed, trials, tol, DEFAULT_MAX_FAILURES)
}

/// Runs `trials` seeded trials. For [`Suite::All`] trial `k` passes when
/// trial `k` of every member suite passes, and the member reports are kept
/// as components.
pub fn run_suite_with(suite: Suite, seed: u64, trials: u64, tol: f64, max_failures: usize) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(contract("trials must be at least 1"));
    }
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(contract(format!("tolerance must be positive and finite, got {tol}")));
    }
    if suite != Suite::All {
        return Ok(single_report(suite, seed, trials, tol, max_failures).0);
    }

    let mut components = Vec::new();
    let mut per_trial: Vec<Option<Failure>> = vec![None; trials as usize];
    for member in Suite::MEMBERS {
        let (report, fails) = single_report(member, seed, trials, tol, max_failures);
        for (slot, f) in per_trial.iter_mut().zip(fails) {
            if let (true, Some(mut f)) = (slot.is_none(), f) {
                f.check = format!("{}/{}", member.name(), f.check);
                *slot = Some(f);
            }
        }
        components.push(report);
    }
    let failed = per_trial.iter().filter(|f| f.is_some()).count() as u64;
    let max_residual = components.iter().map(|c| c.max_residual).fold(0.0, worse);
    let (failures, failures_truncated) = cap(per_trial.into_iter().flatten().collect(), max_failures);
    Ok(SuiteReport {
        suite: Suite::All.name().to_owned(),
        tool_version: TOOL_VERSION.to_owned(),
        seed,
        trials,
        tolerance: tol,
        passed: trials - failed,
        failed,
        max_residual,
        checks: BTreeMap::new(),
        failures,
        failures_truncated,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in std::iter::once(Suite::All).chain(Suite::MEMBERS) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("weyl".parse::<Suite>(), Err(Error::Usage(_))));
    }

    #[test]
    fn clifford_single_trial_is_exact() {
        let r = run_suite(Suite::Clifford, 1, 1, 1e-10).unwrap();
        assert_eq!((r.passed, r.failed), (1, 0));
        assert_eq!(r.max_residual, 0.0);
    }

    #[test]
    fn bad_arguments() {
        assert!(run_suite(Suite::Spinor, 1, 0, 1e-10).is_err());
        assert!(run_suite(Suite::Spinor, 1, 1, 0.0).is_err());
        assert!(run_suite(Suite::Spinor, 1, 1, f64::NAN).is_err());
    }

    #[test]
    fn absurd_tolerance_fails_and_truncates() {
        let r = run_suite_with(Suite::Spinor, 3, 20, 1e-300, 5).unwrap();
        assert_eq!(r.passed + r.failed, 20);
        assert!(r.failed > 5);
        assert_eq!(r.failures.len(), 5);
        assert!(r.failures_truncated);
        assert!(r.failures.windows(2).all(|w| w[0].trial < w[1].trial));
        assert_eq!(r.failures[0].inputs_digest.len(), 64);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::All, 7, 12, 1e-10).unwrap();
        let b = run_suite(Suite::All, 7, 12, 1e-10).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.components.len(), Suite::MEMBERS.len());
        assert!(a.ok(), "{a:#?}");
    }
}
