//! The subcommands as plain functions from parsed JSON input to serializable
//! output.

use delta_jet::Sign;
use delta_solver::{audit_prime_integrals, solve, AuditReport, EquationForms, ProblemJson};
use frobenius_lifts::{legendre_matrix, log_derivative, LiftDescriptor};
use inner_lifts::inner_obstruction_witness;
use padic_core::json::{ContextJson, ScalarInput, ScalarJson};
use padic_core::{Ctx, Error, Result};
use padic_linalg::json::MatrixJson;
use padic_linalg::PMatrix;
use serde::{Deserialize, Serialize};

/// Input of `eval`: a lift descriptor and a point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalInput {
    pub lift: LiftDescriptor,
    pub point: MatrixJson,
}

/// `Φ(a)`, `Δ(a)` and `lδ(a)`; each matrix carries its precision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub context: ContextJson,
    pub lift: String,
    #[serde(rename = "Phi")]
    pub phi: MatrixJson,
    #[serde(rename = "Delta")]
    pub delta: MatrixJson,
    pub ldelta: MatrixJson,
}

pub fn cmd_eval(ctx: &Ctx, input: &EvalInput) -> Result<EvalOutput> {
    let a = input.point.to_matrix(ctx)?;
    let lift = input.lift.to_lift(ctx, a.n())?;
    let phi = lift.evaluate(&a)?;
    let delta = lift.christoffel(&a)?;
    let ldelta = log_derivative(&lift, &a)?;
    Ok(EvalOutput {
        context: ContextJson::from_context(ctx),
        lift: lift.kind().into(),
        phi: MatrixJson::from_matrix(&phi),
        delta: MatrixJson::from_matrix(&delta),
        ldelta: MatrixJson::from_matrix(&ldelta.mat),
    })
}

/// Input of `legendre`: a form and its symmetry (`"+"` by default).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendreInput {
    pub q: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

/// The matrix Legendre symbol `Φ(1)`.  For `f = 1` the entries are also
/// given as balanced integers in `(−p^k/2, p^k/2]`, e.g. `-4` for `q = 2` at `p = 5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendreOutput {
    pub context: ContextJson,
    #[serde(rename = "Phi1")]
    pub phi1: MatrixJson,
    #[serde(rename = "Phi1_balanced", default, skip_serializing_if = "Option::is_none")]
    pub phi1_balanced: Option<Vec<Vec<String>>>,
}

pub fn cmd_legendre(ctx: &Ctx, input: &LegendreInput) -> Result<LegendreOutput> {
    let q = input.q.to_matrix(ctx)?;
    let sign = Sign::parse(input.sign.as_deref().unwrap_or("+"))?;
    let phi1 = legendre_matrix(&q, sign)?;
    Ok(LegendreOutput {
        context: ContextJson::from_context(ctx),
        phi1: MatrixJson::from_matrix(&phi1),
        phi1_balanced: balanced(&phi1),
    })
}

fn balanced(m: &PMatrix) -> Option<Vec<Vec<String>>> {
    if m.ctx().f() != 1 {
        return None;
    }
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| m.get(i, j).to_balanced_i128().map(|v| v.to_string())).collect())
        .collect()
}

/// Input of `witness`: the point `(a, b, c, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessInput {
    pub point: Vec<ScalarInput>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutput {
    pub context: ContextJson,
    pub defect: ScalarJson,
    /// `None` when the defect vanishes at the working precision.
    pub valuation: Option<u32>,
    pub is_witness: bool,
}

pub fn cmd_witness(ctx: &Ctx, input: &WitnessInput) -> Result<WitnessOutput> {
    if input.point.len() != 4 {
        return Err(Error::DimensionMismatch(format!("a point has 4 coordinates, got {}", input.point.len())));
    }
    let v = input.point.iter().map(|x| x.to_scalar(ctx)).collect::<Result<Vec<_>>>()?;
    let r = inner_obstruction_witness(ctx, [&v[0], &v[1], &v[2], &v[3]])?;
    Ok(WitnessOutput {
        context: ContextJson::from_context(ctx),
        defect: ScalarJson::from_scalar(&r.defect),
        valuation: r.valuation,
        is_witness: r.is_witness(),
    })
}

/// The solution, the three forms of the equation checked one digit below
/// its precision, and the prime-integral audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutput {
    pub context: ContextJson,
    pub lift: String,
    pub prec: u32,
    pub u: MatrixJson,
    pub check_prec: u32,
    pub forms: EquationForms,
    pub prime_integrals: AuditReport,
}

pub fn cmd_solve(ctx: &Ctx, input: &ProblemJson) -> Result<SolveOutput> {
    let (problem, seed) = input.to_problem(ctx)?;
    let u = solve(&problem, &seed)?;
    let check_prec = problem.prec - 1;
    let forms = problem.check_forms(&u, check_prec)?;
    let prime_integrals = audit_prime_integrals(&u, &problem, &problem.prime_integrals())?;
    Ok(SolveOutput {
        context: ContextJson::from_context(ctx),
        lift: problem.lift.kind().into(),
        prec: problem.prec,
        u: MatrixJson::from_matrix(&u),
        check_prec,
        forms,
        prime_integrals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    fn parse<T: serde::de::DeserializeOwned>(s: &str) -> T {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn eval_standard_at_identity() {
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let input: EvalInput =
            parse(r#"{"lift": {"kind": "standard"}, "point": {"n": 2, "entries": [[1, 0], [0, 1]]}}"#);
        let out = cmd_eval(&ctx, &input).unwrap();
        assert_eq!(out.phi.to_matrix(&ctx).unwrap(), PMatrix::identity(&ctx, 2));
        assert!(out.delta.to_matrix(&ctx).unwrap().is_zero());
    }

    #[test]
    fn legendre_balanced_value() {
        let ctx = PadicContext::new(5, 1, 10).unwrap();
        let out = cmd_legendre(&ctx, &parse(r#"{"q": {"n": 1, "entries": [[2]]}}"#)).unwrap();
        assert_eq!(out.phi1_balanced, Some(vec![vec!["-4".to_string()]]));
        let ctx2 = PadicContext::new(5, 2, 10).unwrap();
        assert_eq!(cmd_legendre(&ctx2, &parse(r#"{"q": {"n": 1, "entries": [[2]]}}"#)).unwrap().phi1_balanced, None);
    }

    #[test]
    fn witness_at_reference_point() {
        let ctx = PadicContext::new(3, 1, 10).unwrap();
        let out = cmd_witness(&ctx, &parse(r#"{"point": [1, 1, 1, 2]}"#)).unwrap();
        assert_eq!(out.valuation, Some(3));
        assert_eq!(out.defect.coeffs, vec!["216".to_string()]);
        let err = cmd_witness(&ctx, &parse(r#"{"point": [1, 1, 1]}"#)).unwrap_err();
        assert_eq!(err.kind(), "DimensionMismatch");
    }
}
