use delta_jet::{DeltaLieElement, Sign, SubgroupSpec};
use frobenius_lifts::verify::PrimeIntegral;
use frobenius_lifts::{log_derivative, FrobeniusLift, LiftDescriptor};
use padic_core::{Ctx, Error, Result};
use padic_linalg::json::MatrixJson;
use padic_linalg::PMatrix;
use serde::{Deserialize, Serialize};

/// The equation `lδu = α` for a lift `Φ`, solved to precision `prec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaLinearProblem {
    pub lift: FrobeniusLift,
    pub alpha: DeltaLieElement,
    pub prec: u32,
}

/// Which of the three equivalent forms of the equation a point satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationForms {
    /// `lδu = α` (for inner lifts, `lδu = −_δ(u ⋆_δ α) +_δ α`).
    pub log_derivative: bool,
    /// `δu = Δ^α(u)`.
    pub christoffel: bool,
    /// `φ(u) = Φ^α(u)`.
    pub frobenius: bool,
}

impl EquationForms {
    pub fn all(&self) -> bool {
        self.log_derivative && self.christoffel && self.frobenius
    }
}

fn is_inner(lift: &FrobeniusLift) -> bool {
    match lift {
        FrobeniusLift::Conjugation(_) | FrobeniusLift::CharPoly(_) => true,
        FrobeniusLift::InnerTwist { base, .. } => is_inner(base),
        _ => false,
    }
}

impl DeltaLinearProblem {
    /// Checks that `α` has order one and matches the lift's size, and that
    /// the precision is usable (`2 ≤ prec ≤ N`).
    pub fn new(lift: FrobeniusLift, alpha: DeltaLieElement, prec: u32) -> Result<Self> {
        if alpha.order != 1 {
            return Err(Error::OrderMismatch { left: alpha.order, right: 1 });
        }
        if alpha.mat.n() != lift.n() {
            return Err(Error::DimensionMismatch(format!(
                "α is {0}x{0} but the lift acts on {1}x{1} matrices",
                alpha.mat.n(),
                lift.n()
            )));
        }
        let available = alpha.mat.ctx().precision();
        if prec < 2 || prec > available {
            return Err(Error::InsufficientPrecision { needed: prec.max(2), available });
        }
        Ok(DeltaLinearProblem { lift, alpha, prec })
    }

    /// The default solving precision `N − 2`: one digit for `δ` inside `Δ^α`
    /// and one for checking.
    pub fn default_prec(ctx: &Ctx) -> u32 {
        ctx.precision().saturating_sub(2).max(2)
    }

    pub fn ctx(&self) -> &Ctx {
        self.alpha.mat.ctx()
    }

    pub fn n(&self) -> usize {
        self.lift.n()
    }

    /// `ε = 1 + pα`.
    pub fn epsilon(&self) -> PMatrix {
        self.alpha.unit()
    }

    /// True for the conjugation-twisted inner lifts.
    pub fn is_inner(&self) -> bool {
        is_inner(&self.lift)
    }

    /// The twisted lift `Φ^α`: `εΦ` for outer lifts, `εΦε⁻¹` for inner ones.
    pub fn twisted_lift(&self) -> FrobeniusLift {
        if self.is_inner() {
            FrobeniusLift::InnerTwist { alpha: self.alpha.mat.clone(), base: Box::new(self.lift.clone()) }
        } else {
            FrobeniusLift::Twist { alpha: self.alpha.clone(), base: Box::new(self.lift.clone()) }
        }
    }

    /// Checks the three forms of the equation at `u`, modulo `p^prec`.
    pub fn check_forms(&self, u: &PMatrix, prec: u32) -> Result<EquationForms> {
        let twisted = self.twisted_lift();
        let frobenius = u.frobenius(1).agrees_to(&twisted.evaluate(u)?, prec);
        let christoffel = u.delta()?.agrees_to(&twisted.christoffel(u)?, prec);
        let ld = log_derivative(&self.lift, u)?;
        let expected = if self.is_inner() {
            DeltaLieElement::star(u, &self.alpha)?.neg()?.plus(&self.alpha)?
        } else {
            self.alpha.clone()
        };
        let log_derivative = ld.mat.agrees_to(&expected.mat, prec);
        Ok(EquationForms { log_derivative, christoffel, frobenius })
    }

    /// The functions expected to be prime integrals of this equation:
    /// `u^t q u` for a Chern lift twisted inside `L_δ(SO(q))` (and
    /// `q⁻¹u^t q u` when `q` is split), `det` for the special-linear lift
    /// twisted inside `L_δ(SL_n)`, and the characteristic polynomial for the
    /// characteristic-polynomial lift.
    pub fn prime_integrals(&self) -> Vec<PrimeIntegral> {
        let mut out = Vec::new();
        match &self.lift {
            FrobeniusLift::Chern { q, sign } => self.push_form_integrals(q, *sign, &mut out),
            FrobeniusLift::Hermitian { q } => self.push_form_integrals(q, Sign::Plus, &mut out),
            FrobeniusLift::SpecialLinear(n) => {
                if SubgroupSpec::SpecialLinear(*n).delta_lie_contains(&self.alpha) {
                    out.push(PrimeIntegral::Det);
                }
            }
            FrobeniusLift::CharPoly(_) => out.push(PrimeIntegral::CharPoly),
            _ => {}
        }
        out
    }

    fn push_form_integrals(&self, q: &PMatrix, sign: Sign, out: &mut Vec<PrimeIntegral>) {
        if let Ok(spec) = SubgroupSpec::orthogonal(q.clone(), sign) {
            if spec.delta_lie_contains(&self.alpha) {
                out.push(PrimeIntegral::Hq(q.clone()));
                if let SubgroupSpec::Orthogonal { split: Some(_), .. } = spec {
                    out.push(PrimeIntegral::HqNormalized(q.clone()));
                }
            }
        }
    }
}

/// Problem JSON: `{"lift": descriptor, "alpha": matrix, "seed": matrix, "prec": k}`.
/// The seed entries are read modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemJson {
    pub lift: LiftDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<MatrixJson>,
    pub seed: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<u32>,
}

impl ProblemJson {
    /// The problem and the seed (at precision 1).
    pub fn to_problem(&self, ctx: &Ctx) -> Result<(DeltaLinearProblem, PMatrix)> {
        let seed = self.seed.to_matrix(ctx)?.with_prec(1);
        let lift = self.lift.to_lift(ctx, seed.n())?;
        let alpha = match &self.alpha {
            Some(m) => DeltaLieElement::order_one(m.to_matrix(ctx)?),
            None => DeltaLieElement::zero(&seed, 1),
        };
        let prec = self.prec.unwrap_or_else(|| DeltaLinearProblem::default_prec(ctx));
        Ok((DeltaLinearProblem::new(lift, alpha, prec)?, seed))
    }
}
