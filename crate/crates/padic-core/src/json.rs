//! JSON value formats for contexts and scalars.
//!
//! All p-adic values are written as base-10 strings of the canonical
//! representative in `[0, p^k)`.  Inputs are more lenient: a scalar may also
//! be a bare (possibly negative) integer or decimal string, which is taken at
//! full precision with `f − 1` zero higher coordinates.

use serde::{Deserialize, Serialize};

use crate::context::{Ctx, PadicContext};
use crate::error::{Error, Result};
use crate::scalar::PadicScalar;

/// Serialized context: `{"p":…, "f":…, "N":…, "modulus":[…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextJson {
    pub p: u64,
    pub f: usize,
    #[serde(rename = "N")]
    pub n: u32,
    /// Monic modulus, constant term first, as decimal strings.  Optional on
    /// input; the default modulus is used when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<String>>,
}

impl ContextJson {
    pub fn from_context(ctx: &PadicContext) -> Self {
        ContextJson {
            p: ctx.p(),
            f: ctx.f(),
            n: ctx.precision(),
            modulus: Some(ctx.modulus().iter().map(|c| c.to_string()).collect()),
        }
    }

    pub fn to_context(&self) -> Result<Ctx> {
        match &self.modulus {
            None => PadicContext::new(self.p, self.f, self.n),
            Some(m) => {
                let coeffs = m.iter().map(|s| parse_int(s)).collect::<Result<Vec<_>>>()?;
                if coeffs.len() != self.f + 1 {
                    return Err(Error::InvalidContext(format!(
                        "modulus must have f + 1 = {} coefficients",
                        self.f + 1
                    )));
                }
                PadicContext::with_modulus(self.p, self.n, &coeffs)
            }
        }
    }
}

/// Serialized scalar: `{"coeffs": [decimal strings], "prec": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub coeffs: Vec<String>,
    pub prec: u32,
}

/// Accepted scalar inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarInput {
    Full(ScalarJson),
    Int(i64),
    Text(String),
}

pub(crate) fn parse_int(s: &str) -> Result<i128> {
    s.trim()
        .parse::<i128>()
        .map_err(|e| Error::Parse(format!("invalid integer {s:?}: {e}")))
}

impl ScalarJson {
    pub fn from_scalar(x: &PadicScalar) -> Self {
        ScalarJson { coeffs: x.coeffs().iter().map(|c| c.to_string()).collect(), prec: x.prec() }
    }

    pub fn to_scalar(&self, ctx: &Ctx) -> Result<PadicScalar> {
        let coeffs = self.coeffs.iter().map(|s| parse_int(s)).collect::<Result<Vec<_>>>()?;
        PadicScalar::from_coeffs(ctx, &coeffs, self.prec)
    }
}

impl ScalarInput {
    pub fn to_scalar(&self, ctx: &Ctx) -> Result<PadicScalar> {
        match self {
            ScalarInput::Full(s) => s.to_scalar(ctx),
            ScalarInput::Int(v) => Ok(PadicScalar::from_i64(ctx, *v)),
            ScalarInput::Text(t) => Ok(PadicScalar::from_i128(ctx, parse_int(t)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let ctx = PadicContext::new(5, 2, 6).unwrap();
        let x = PadicScalar::from_coeffs(&ctx, &[-3, 17], 5).unwrap();
        let text = serde_json::to_string(&ScalarJson::from_scalar(&x)).unwrap();
        let back: ScalarInput = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_scalar(&ctx).unwrap(), x);
    }

    #[test]
    fn negative_shorthand() {
        let ctx = PadicContext::new(5, 1, 4).unwrap();
        let x: ScalarInput = serde_json::from_str("-4").unwrap();
        assert_eq!(x.to_scalar(&ctx).unwrap().coeffs(), &[621]);
        let y: ScalarInput = serde_json::from_str("\"-4\"").unwrap();
        assert_eq!(y.to_scalar(&ctx).unwrap().coeffs(), &[621]);
    }

    #[test]
    fn context_round_trip() {
        let ctx = PadicContext::new(7, 2, 5).unwrap();
        let j = ContextJson::from_context(&ctx);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"N\":5"));
        let back: ContextJson = serde_json::from_str(&text).unwrap();
        assert_eq!(*back.to_context().unwrap(), *ctx);
    }
}
