use delta_jet::{DeltaLieElement, Sign};
use padic_core::{Ctx, Error, Result};
use padic_linalg::json::MatrixJson;
use serde::{Deserialize, Serialize};

use crate::lift::FrobeniusLift;

/// JSON description of a lift:
/// `{"kind": …, "n": …, "q": matrix, "sign": "+"|"-", "alpha": matrix, "base": descriptor}`.
///
/// Kinds: `standard`, `chern`, `sl`, `hermitian`, `conjugation`, `charpoly`,
/// `twist` (`(1 + pα)·base`), `isospectral` (`ε·base·ε⁻¹`) and `perturbed`
/// (`base + p·alpha`, a negative control).  `n` is only needed by kinds
/// without a matrix to infer it from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftDescriptor {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<LiftDescriptor>>,
}

fn missing(kind: &str, field: &str) -> Error {
    Error::Parse(format!("lift kind {kind:?} needs field {field:?}"))
}

impl LiftDescriptor {
    fn simple(kind: &str, n: usize) -> Self {
        LiftDescriptor { kind: kind.into(), n: Some(n), q: None, sign: None, alpha: None, base: None }
    }

    /// Builds the lift; `n` falls back to `default_n` for kinds that need it.
    pub fn to_lift(&self, ctx: &Ctx, default_n: usize) -> Result<FrobeniusLift> {
        let n = self.n.unwrap_or(default_n);
        let kind = self.kind.as_str();
        let matrix = |m: &Option<MatrixJson>, field: &str| -> Result<_> {
            m.as_ref().ok_or_else(|| missing(kind, field))?.to_matrix(ctx)
        };
        let base = || -> Result<FrobeniusLift> {
            self.base.as_ref().ok_or_else(|| missing(kind, "base"))?.to_lift(ctx, n)
        };
        match kind {
            "standard" => Ok(FrobeniusLift::Standard(n)),
            "chern" => {
                let sign = Sign::parse(self.sign.as_deref().unwrap_or("+"))?;
                FrobeniusLift::chern(matrix(&self.q, "q")?, sign)
            }
            "sl" => FrobeniusLift::special_linear(ctx, n),
            "hermitian" => FrobeniusLift::hermitian(matrix(&self.q, "q")?),
            "conjugation" => Ok(FrobeniusLift::Conjugation(n)),
            "charpoly" => Ok(FrobeniusLift::CharPoly(n)),
            "twist" => {
                let alpha = DeltaLieElement::order_one(matrix(&self.alpha, "alpha")?);
                FrobeniusLift::twist(alpha, base()?)
            }
            "isospectral" => FrobeniusLift::inner_twist(matrix(&self.alpha, "alpha")?, base()?),
            "perturbed" => FrobeniusLift::perturbed(matrix(&self.alpha, "alpha")?, base()?),
            other => Err(Error::Parse(format!("unknown lift kind {other:?}"))),
        }
    }

    pub fn from_lift(lift: &FrobeniusLift) -> Self {
        let mut d = LiftDescriptor::simple(lift.kind(), lift.n());
        match lift {
            FrobeniusLift::Chern { q, sign } => {
                d.q = Some(MatrixJson::from_matrix(q));
                d.sign = Some(sign.symbol().into());
            }
            FrobeniusLift::Hermitian { q } => d.q = Some(MatrixJson::from_matrix(q)),
            FrobeniusLift::Twist { alpha, base } => {
                d.alpha = Some(MatrixJson::from_matrix(&alpha.mat));
                d.base = Some(Box::new(Self::from_lift(base)));
            }
            FrobeniusLift::InnerTwist { alpha, base } | FrobeniusLift::Perturbed { offset: alpha, base } => {
                d.alpha = Some(MatrixJson::from_matrix(alpha));
                d.base = Some(Box::new(Self::from_lift(base)));
            }
            _ => {}
        }
        d
    }
}
