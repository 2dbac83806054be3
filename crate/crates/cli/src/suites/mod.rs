//! The verification suites: every identity of the library as a sampled,
//! exact-congruence check.
//!
//! A *check* is run on a grid of *cells* `(p, f, n)`.  Each sample of a cell
//! draws from its own ChaCha8 stream, keyed by the run seed, the check, the
//! cell and the sample index, so results do not depend on the thread count,
//! on the order in which cells run, or on which other checks are selected.

mod bracket;
mod inner;
mod jet;
mod outer;
mod padic;
mod solver;

use padic_core::{Ctx, Error, PadicContext};
use padic_linalg::json::MatrixJson;
use padic_linalg::PMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Suite names accepted by `verify --suite`.
pub const SUITES: [&str; 7] = ["padic", "jet", "bracket", "outer", "inner", "solver", "all"];

/// How the samples of the report were drawn; copied into every report header.
pub const SAMPLING: &str = "entries uniform over the digits of Z/p^N (all f coordinates); \
     resampled until the unit, regularity or domain conditions of the check hold; \
     one ChaCha8 stream per (seed, check, p, f, n, sample)";

/// Result of one sample.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    /// The identity failed; the value is the counterexample dump.
    Fail(Value),
    /// The cell has no admissible points (e.g. a residue field too small for
    /// a regular diagonal); the sample is not counted.
    Inapplicable,
}

pub(crate) type Sampler = fn(&Cell, &mut ChaCha8Rng) -> padic_core::Result<Outcome>;

/// Whether a check draws random samples or runs one exhaustive pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Random,
    Exhaustive,
}

/// One named identity.
#[derive(Clone, Copy)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    /// Matrix sizes the check runs at.
    pub dims: &'static [usize],
    /// Primes the check is restricted to, if any.
    pub primes: Option<&'static [u64]>,
    pub mode: Mode,
    pub(crate) run: Sampler,
}

/// The data a sample sees.
#[derive(Debug, Clone)]
pub struct Cell {
    pub ctx: Ctx,
    pub n: usize,
    /// Working precision `N`.
    pub prec: u32,
    /// Replace every Chern lift by a deliberately corrupted one (negative control).
    pub corrupt_lambda: bool,
}

impl Cell {
    pub fn p(&self) -> u64 {
        self.ctx.p()
    }
}

/// Every check, in report order.  The position in this list is part of the
/// sampling key, so new checks are appended.
pub fn registry() -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(padic::checks());
    out.extend(jet::checks());
    out.extend(bracket::checks());
    out.extend(outer::checks());
    out.extend(inner::checks());
    out.extend(solver::checks());
    out
}

/// Options of a suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    /// Working precision `N`.
    pub prec: u32,
    pub primes: Vec<u64>,
    pub degrees: Vec<usize>,
    /// Restricts every check to these sizes (intersected with its own).
    pub dims: Option<Vec<usize>>,
    /// Restricts the run to checks whose name is listed.
    pub only: Option<Vec<String>>,
    pub corrupt_lambda: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            suite: "all".into(),
            seed: 0,
            samples: 100,
            prec: 10,
            primes: vec![3, 5, 7],
            degrees: vec![1, 2],
            dims: None,
            only: None,
            corrupt_lambda: false,
        }
    }
}

/// Report header: everything needed to reproduce the run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    #[serde(rename = "N")]
    pub prec: u32,
    pub primes: Vec<u64>,
    pub degrees: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    pub corrupt_lambda: bool,
    pub sampling: String,
}

/// A failing sample and its counterexample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureDump {
    pub sample: usize,
    pub detail: Value,
}

/// Status of one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one check on one cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub suite: String,
    pub check: String,
    pub p: u64,
    pub f: usize,
    pub n: usize,
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    pub inapplicable: usize,
    pub status: Status,
    /// The first few failures, by sample index.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<FailureDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cells: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: ReportHeader,
    pub checks: Vec<CellReport>,
    pub summary: Summary,
    pub passed: bool,
}

impl Report {
    /// Cell reports of the named check.
    pub fn cells_of<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CellReport> + 'a {
        self.checks.iter().filter(move |c| c.check == check)
    }

    /// One line per cell plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{tag} {}/{} p={} f={} n={} passed={}/{}",
                c.suite, c.check, c.p, c.f, c.n, c.passed, c.samples
            ));
            if let Some(first) = c.failures.first() {
                out.push_str(&format!(" first-failure=#{} {}", first.sample, first.detail));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} cells: {} passed, {} failed, {} skipped — {}\n",
            s.cells,
            s.passed,
            s.failed,
            s.skipped,
            if self.passed { "OK" } else { "FAILED" }
        ));
        out
    }
}

const MAX_DUMPS: usize = 3;

struct Job {
    check_id: usize,
    check: Check,
    p: u64,
    f: usize,
    n: usize,
    samples: usize,
}

/// The sampling key of one sample as a ChaCha seed.
fn sample_rng(seed: u64, check_id: usize, p: u64, f: usize, n: usize, sample: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..12].copy_from_slice(&(check_id as u32).to_le_bytes());
    key[12..16].copy_from_slice(&(p as u32).to_le_bytes());
    key[16..18].copy_from_slice(&(f as u16).to_le_bytes());
    key[18..20].copy_from_slice(&(n as u16).to_le_bytes());
    key[20..28].copy_from_slice(&(sample as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn selected(opts: &SuiteOptions, check: &Check) -> bool {
    (opts.suite == "all" || opts.suite == check.suite)
        && opts.only.as_ref().map_or(true, |names| names.iter().any(|n| n == check.name))
}

/// Runs the selected checks on the thread pool of the caller.
pub fn run_suite(opts: &SuiteOptions) -> padic_core::Result<Report> {
    if !SUITES.contains(&opts.suite.as_str()) {
        return Err(Error::Parse(format!("unknown suite {:?}; expected one of {}", opts.suite, SUITES.join(", "))));
    }
    let mut jobs = Vec::new();
    for (check_id, check) in registry().into_iter().enumerate() {
        if !selected(opts, &check) {
            continue;
        }
        for &p in &opts.primes {
            if check.primes.is_some_and(|ps| !ps.contains(&p)) {
                continue;
            }
            for &f in &opts.degrees {
                for &n in check.dims {
                    if opts.dims.as_ref().is_some_and(|d| !d.contains(&n)) {
                        continue;
                    }
                    let samples = match check.mode {
                        Mode::Random => opts.samples,
                        Mode::Exhaustive => 1,
                    };
                    jobs.push(Job { check_id, check, p, f, n, samples });
                }
            }
        }
    }
    let mut contexts = Vec::new();
    for &p in &opts.primes {
        for &f in &opts.degrees {
            contexts.push(((p, f), PadicContext::new(p, f, opts.prec)?));
        }
    }
    let ctx_of = |p: u64, f: usize| contexts.iter().find(|(k, _)| *k == (p, f)).map(|(_, c)| c.clone()).unwrap();

    let tasks: Vec<(usize, usize)> =
        jobs.iter().enumerate().flat_map(|(j, job)| (0..job.samples).map(move |s| (j, s))).collect();
    let outcomes: Vec<Outcome> = tasks
        .par_iter()
        .map(|&(j, s)| {
            let job = &jobs[j];
            let cell = Cell { ctx: ctx_of(job.p, job.f), n: job.n, prec: opts.prec, corrupt_lambda: opts.corrupt_lambda };
            let mut rng = sample_rng(opts.seed, job.check_id, job.p, job.f, job.n, s);
            (job.check.run)(&cell, &mut rng).unwrap_or_else(|e| Outcome::Fail(error_detail(&e)))
        })
        .collect();

    let mut checks = Vec::with_capacity(jobs.len());
    let mut it = outcomes.into_iter();
    for job in &jobs {
        let mut cell = CellReport {
            suite: job.check.suite.into(),
            check: job.check.name.into(),
            p: job.p,
            f: job.f,
            n: job.n,
            samples: job.samples,
            passed: 0,
            failed: 0,
            inapplicable: 0,
            status: Status::Pass,
            failures: Vec::new(),
        };
        for (s, outcome) in it.by_ref().take(job.samples).enumerate() {
            match outcome {
                Outcome::Pass => cell.passed += 1,
                Outcome::Inapplicable => cell.inapplicable += 1,
                Outcome::Fail(detail) => {
                    cell.failed += 1;
                    if cell.failures.len() < MAX_DUMPS {
                        cell.failures.push(FailureDump { sample: s, detail });
                    }
                }
            }
        }
        cell.status = if cell.failed > 0 {
            Status::Fail
        } else if cell.passed == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        checks.push(cell);
    }
    let summary = Summary {
        cells: checks.len(),
        passed: checks.iter().filter(|c| c.status == Status::Pass).count(),
        failed: checks.iter().filter(|c| c.status == Status::Fail).count(),
        skipped: checks.iter().filter(|c| c.status == Status::Skipped).count(),
    };
    let header = ReportHeader {
        tool: "deltagl".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        suite: opts.suite.clone(),
        seed: opts.seed,
        samples: opts.samples,
        prec: opts.prec,
        primes: opts.primes.clone(),
        degrees: opts.degrees.clone(),
        dims: opts.dims.clone(),
        corrupt_lambda: opts.corrupt_lambda,
        sampling: SAMPLING.into(),
    };
    let passed = summary.failed == 0;
    Ok(Report { header, checks, summary, passed })
}

/// Structured form of a library error.
pub fn error_detail(e: &Error) -> Value {
    json!({"error": e.kind(), "message": e.to_string()})
}

/// Counterexample helper: a matrix in the report's JSON format.
pub(crate) fn mat(m: &PMatrix) -> Value {
    serde_json::to_value(MatrixJson::from_matrix(m)).expect("matrices serialize")
}

/// `Pass` when `ok`, otherwise `Fail(detail())`.
pub(crate) fn expect(ok: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Combines the outcomes of several sub-identities of one sample: the first
/// failure wins, and the sample is inapplicable only if every part is.
pub(crate) fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut any_pass = false;
    for o in outcomes {
        match o {
            Outcome::Fail(_) => return o,
            Outcome::Pass => any_pass = true,
            Outcome::Inapplicable => {}
        }
    }
    if any_pass {
        Outcome::Pass
    } else {
        Outcome::Inapplicable
    }
}
