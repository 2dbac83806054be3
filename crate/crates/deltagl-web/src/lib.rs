//! Browser bindings for three `deltagl` commands.
//!
//! Each function takes the context `(p, f, N)` and the same JSON input as
//! the corresponding subcommand, and returns the JSON output, or
//! `{"error": kind, "message": text}` on failure.  The page in `www/`
//! calls them directly.

use deltagl::commands::{cmd_eval, cmd_legendre, cmd_witness};
use deltagl::{error_json, parse_json};
use padic_core::{PadicContext, Result};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

fn run<I, O, F>(p: u32, f: u32, prec: u32, input: &str, command: F) -> String
where
    I: serde::de::DeserializeOwned,
    O: Serialize,
    F: FnOnce(&padic_core::Ctx, &I) -> Result<O>,
{
    let result = PadicContext::new(p as u64, f as usize, prec)
        .and_then(|ctx| command(&ctx, &parse_json(input)?))
        .map(|out| serde_json::to_string_pretty(&out).expect("outputs serialize"));
    result.unwrap_or_else(|e| error_json(&e))
}

/// Matrix Legendre symbol `Φ(1)` of `{"q": matrix, "sign"?}`.
#[wasm_bindgen]
pub fn legendre(p: u32, f: u32, prec: u32, input: &str) -> String {
    run(p, f, prec, input, cmd_legendre)
}

/// `Φ(a)`, `Δ(a)`, `lδ(a)` for `{"lift": descriptor, "point": matrix}`.
#[wasm_bindgen]
pub fn evaluate(p: u32, f: u32, prec: u32, input: &str) -> String {
    run(p, f, prec, input, cmd_eval)
}

/// The conjugation-obstruction witness at `{"point": [a, b, c, d]}`.
#[wasm_bindgen]
pub fn witness(p: u32, f: u32, prec: u32, input: &str) -> String {
    run(p, f, prec, input, cmd_witness)
}
