use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use deltagl::{error_json, execute, Command, Format, RunConfig, THREADS_ENV};
use padic_core::Error;

/// δ-geometry of GL_n over W(F_{p^f})/p^N: Frobenius lifts, Legendre
/// matrices, δ-linear equations and verification suites.
#[derive(Parser, Debug)]
#[command(name = "deltagl", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// The prime p.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Residue degree f.
    #[arg(long, global = true)]
    f: Option<usize>,
    /// Working precision N (digits).
    #[arg(long = "N", global = true)]
    prec: Option<u32>,
    /// Matrix size (verify: restricts the grid).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Context file {"p", "f", "N", "modulus"?}.
    #[arg(long, global = true)]
    context: Option<PathBuf>,
    /// Input JSON file (default: stdin).
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long = "out", global = true)]
    output: Option<PathBuf>,
    /// Output format: json or text.
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate Φ(a), Δ(a) and lδ(a) for {"lift": descriptor, "point": matrix}.
    Eval,
    /// Run a verification suite.
    Verify {
        /// padic, jet, bracket, outer, inner, solver or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Samples per check and grid cell.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Negative control: corrupt Λ in every Chern lift.
        #[arg(long, hide = true)]
        corrupt_lambda: bool,
    },
    /// Solve φ(u) = Φ^α(u) for {"lift", "alpha"?, "seed", "prec"?}.
    Solve,
    /// Evaluate the conjugation-obstruction witness at {"point": [a, b, c, d]}.
    Witness,
    /// Matrix Legendre symbol Φ(1) of {"q": matrix, "sign"?: "+" | "-"}.
    Legendre,
}

fn config(cli: Cli) -> Result<RunConfig, Error> {
    let command = match &cli.command {
        Cmd::Eval => Command::Eval,
        Cmd::Verify { .. } => Command::Verify,
        Cmd::Solve => Command::Solve,
        Cmd::Witness => Command::Witness,
        Cmd::Legendre => Command::Legendre,
    };
    let mut cfg = RunConfig::new(command);
    let c = cli.common;
    cfg.p = c.p;
    cfg.f = c.f;
    cfg.prec = c.prec;
    cfg.n = c.n;
    cfg.context = c.context;
    cfg.input = c.input;
    cfg.output = c.output;
    cfg.format = Format::parse(&c.format)?;
    if let Cmd::Verify { suite, samples, seed, corrupt_lambda } = cli.command {
        cfg.suite = suite;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.corrupt_lambda = corrupt_lambda;
    }
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n = v.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{THREADS_ENV}={v:?}: {e}")))?;
        cfg.threads = Some(n.max(1));
    }
    Ok(cfg)
}

fn emit(cfg_output: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match cfg_output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(cli).and_then(|cfg| {
        let run = execute(&cfg, &mut std::io::stdin().lock())?;
        emit(cfg.output.as_ref(), &run.output)?;
        Ok(run.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprint!("{}", error_json(&e));
            ExitCode::from(2)
        }
    }
}
