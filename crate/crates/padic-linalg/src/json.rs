//! JSON format for matrices: `{"n":…, "entries": [[scalar,…],…], "prec": k}`.

use padic_core::json::{ScalarInput, ScalarJson};
use padic_core::{Ctx, Error, Result};
use serde::{Deserialize, Serialize};

use crate::matrix::PMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<ScalarInput>>,
    /// Uniform precision.  On input, entries given as bare integers take
    /// this precision (default: the context precision).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<u32>,
}

impl MatrixJson {
    pub fn from_matrix(m: &PMatrix) -> Self {
        let n = m.n();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| ScalarInput::Full(ScalarJson::from_scalar(m.get(i, j)))).collect())
            .collect();
        MatrixJson { n, entries, prec: Some(m.prec()) }
    }

    pub fn to_matrix(&self, ctx: &Ctx) -> Result<PMatrix> {
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(Error::DimensionMismatch(format!("expected a {0}x{0} entry grid", self.n)));
        }
        let mut data = Vec::with_capacity(self.n * self.n);
        for row in &self.entries {
            for e in row {
                let x = e.to_scalar(ctx)?;
                data.push(match self.prec {
                    Some(k) => x.with_prec(k),
                    None => x,
                });
            }
        }
        PMatrix::new(ctx, self.n, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn round_trip() {
        let ctx = PadicContext::new(3, 2, 5).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[1, -2], &[7, 0]]).with_prec(4);
        let text = serde_json::to_string(&MatrixJson::from_matrix(&m)).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix(&ctx).unwrap(), m);
    }

    #[test]
    fn integer_shorthand_and_shape_errors() {
        let ctx = PadicContext::new(5, 1, 4).unwrap();
        let j: MatrixJson = serde_json::from_str(r#"{"n":2,"entries":[[1,"-1"],[0,2]]}"#).unwrap();
        assert_eq!(j.to_matrix(&ctx).unwrap(), PMatrix::from_i64(&ctx, &[&[1, -1], &[0, 2]]));
        let bad: MatrixJson = serde_json::from_str(r#"{"n":2,"entries":[[1,2]]}"#).unwrap();
        assert_eq!(bad.to_matrix(&ctx).unwrap_err().kind(), "DimensionMismatch");
    }
}
