//! Command-line front end for the δ-geometry of `GL_n` over `W(F_{p^f})/p^N`.
//!
//! The binary `deltagl` is a thin wrapper over [`execute`]: it evaluates
//! lifts of Frobenius, computes matrix Legendre symbols, solves δ-linear
//! equations, evaluates the conjugation-obstruction witness, and runs the
//! deterministic verification suites of [`suites`].
//!
//! Exit codes: `0` on success (for `verify`: every check passed), `1` when a
//! verification check fails, `2` on any error, reported as
//! `{"error": kind, "message": text}`.

pub mod commands;
pub mod suites;

use std::io::Read;
use std::path::PathBuf;

use padic_core::json::{ContextJson, ScalarInput};
use padic_core::{Ctx, Error, PadicContext, Result};
use padic_linalg::json::MatrixJson;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

pub use suites::{run_suite, Report, SuiteOptions};

/// Environment variable capping the number of worker threads of `verify`.
pub const THREADS_ENV: &str = "DELTAGL_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse(format!("unknown format {other:?}; expected json or text"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Verify,
    Solve,
    Witness,
    Legendre,
}

/// Everything one invocation needs.  Identical configurations produce
/// byte-identical output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// Context file `{"p", "f", "N", "modulus"?}`; overrides `p`, `f`, `prec`.
    pub context: Option<PathBuf>,
    pub p: Option<u64>,
    pub f: Option<usize>,
    pub prec: Option<u32>,
    pub n: Option<usize>,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub samples: usize,
    pub suite: String,
    pub format: Format,
    /// Negative control for `verify`: corrupt every Chern lift.
    pub corrupt_lambda: bool,
    /// Worker threads for `verify` (`None`: one per core).
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            context: None,
            p: None,
            f: None,
            prec: None,
            n: None,
            input: None,
            output: None,
            seed: 0,
            samples: 100,
            suite: "all".into(),
            format: Format::Json,
            corrupt_lambda: false,
            threads: None,
        }
    }

    /// The context of the single-point commands: from the context file, or
    /// from `--p` (required), `--f` (default 1) and `--N` (default 10).
    pub fn context(&self) -> Result<Ctx> {
        if let Some(path) = &self.context {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read context file {}: {e}", path.display())))?;
            return parse_json::<ContextJson>(&text)?.to_context();
        }
        let p = self.p.ok_or_else(|| Error::InvalidContext("missing --p (or --context)".into()))?;
        PadicContext::new(p, self.f.unwrap_or(1), self.prec.unwrap_or(10))
    }

    /// Suite options: the grid is restricted by `--p`, `--f`, `--n` when given.
    pub fn suite_options(&self) -> SuiteOptions {
        let defaults = SuiteOptions::default();
        SuiteOptions {
            suite: self.suite.clone(),
            seed: self.seed,
            samples: self.samples,
            prec: self.prec.unwrap_or(defaults.prec),
            primes: self.p.map_or(defaults.primes, |p| vec![p]),
            degrees: self.f.map_or(defaults.degrees, |f| vec![f]),
            dims: self.n.map(|n| vec![n]),
            only: None,
            corrupt_lambda: self.corrupt_lambda,
        }
    }
}

/// Rendered output and the exit code it should be reported with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub output: String,
    pub exit_code: i32,
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

/// `{"error": kind, "message": text}`.
pub fn error_json(e: &Error) -> String {
    to_json(&suites::error_detail(e))
}

/// Runs `verify` on a pool of `threads` workers (default: one per core).
pub fn run_verify(opts: &SuiteOptions, threads: Option<usize>) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidContext(format!("cannot start worker threads: {e}")))?;
    pool.install(|| run_suite(opts))
}

/// Runs one command; `stdin` is read when a command needs input and no
/// `--in` file was given.
pub fn execute(cfg: &RunConfig, stdin: &mut dyn Read) -> Result<Execution> {
    if cfg.command == Command::Verify {
        let report = run_verify(&cfg.suite_options(), cfg.threads)?;
        let output = match cfg.format {
            Format::Json => to_json(&report),
            Format::Text => report.to_text(),
        };
        return Ok(Execution { output, exit_code: if report.passed { 0 } else { 1 } });
    }
    let ctx = cfg.context()?;
    let text = match &cfg.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let value = match cfg.command {
        Command::Eval => serde_json::to_value(commands::cmd_eval(&ctx, &parse_json(&text)?)?),
        Command::Legendre => serde_json::to_value(commands::cmd_legendre(&ctx, &parse_json(&text)?)?),
        Command::Witness => serde_json::to_value(commands::cmd_witness(&ctx, &parse_json(&text)?)?),
        Command::Solve => serde_json::to_value(commands::cmd_solve(&ctx, &parse_json(&text)?)?),
        Command::Verify => unreachable!("handled above"),
    }
    .expect("outputs serialize");
    let output = match cfg.format {
        Format::Json => to_json(&value),
        Format::Text => value_to_text(&value, 0),
    };
    Ok(Execution { output, exit_code: 0 })
}

/// Plain-text rendering of a command output: one `key: value` line per
/// field, matrices as rows of canonical representatives.
fn value_to_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = String::new();
    let Value::Object(map) = v else { return format!("{pad}{v}\n") };
    for (k, field) in map {
        if let Ok(m) = serde_json::from_value::<MatrixJson>(field.clone()) {
            out.push_str(&format!("{pad}{k} (prec {}):\n", m.prec.map_or("-".into(), |p| p.to_string())));
            for row in &m.entries {
                let cells: Vec<String> = row.iter().map(scalar_text).collect();
                out.push_str(&format!("{pad}  [{}]\n", cells.join(", ")));
            }
        } else if field.is_object() {
            out.push_str(&format!("{pad}{k}:\n{}", value_to_text(field, indent + 1)));
        } else {
            out.push_str(&format!("{pad}{k}: {field}\n"));
        }
    }
    out
}

fn scalar_text(x: &ScalarInput) -> String {
    match x {
        ScalarInput::Full(s) if s.coeffs.len() == 1 => s.coeffs[0].clone(),
        ScalarInput::Full(s) => format!("({})", s.coeffs.join(", ")),
        ScalarInput::Int(i) => i.to_string(),
        ScalarInput::Text(t) => t.clone(),
    }
}
