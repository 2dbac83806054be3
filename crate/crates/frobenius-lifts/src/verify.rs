//! Pointwise verification of the identities a lift is expected to satisfy.
//!
//! Each check compares two matrices and records its *shortfall*: how many
//! p-adic digits below the target precision the two sides stop agreeing
//! (`0` is an exact pass at the target precision).

use delta_jet::{check_form, Sign};
use padic_core::{Error, Result};
use padic_linalg::{char_poly, PMatrix};
use serde::{Deserialize, Serialize};

use crate::lift::FrobeniusLift;

/// Per-sample shortfalls of one identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub target_prec: u32,
    /// One entry per sample; `target_prec` for samples that could not be
    /// evaluated at all.
    pub shortfalls: Vec<u32>,
}

impl VerifyReport {
    pub fn max_shortfall(&self) -> u32 {
        self.shortfalls.iter().copied().max().unwrap_or(0)
    }

    pub fn passed(&self) -> bool {
        self.max_shortfall() == 0
    }

    /// Indices of the failing samples.
    pub fn failures(&self) -> Vec<usize> {
        self.shortfalls.iter().enumerate().filter(|(_, &s)| s > 0).map(|(i, _)| i).collect()
    }
}

/// Digits below `target` at which `lhs` and `rhs` stop agreeing.
pub fn shortfall(lhs: &PMatrix, rhs: &PMatrix, target: u32) -> u32 {
    target - lhs.diff_valuation(rhs).min(target)
}

fn run(check: &str, target: u32, samples: &[PMatrix], f: impl Fn(&PMatrix) -> Result<(PMatrix, PMatrix)>) -> VerifyReport {
    let shortfalls = samples
        .iter()
        .map(|a| match f(a) {
            Ok((lhs, rhs)) => shortfall(&lhs, &rhs, target),
            Err(_) => target,
        })
        .collect();
    VerifyReport { check: check.to_string(), target_prec: target, shortfalls }
}

fn target_of(q: &PMatrix) -> u32 {
    q.ctx().precision().saturating_sub(1)
}

/// `H_q`-horizontality of `lift` with respect to `base` on the target of
/// `H_q(x) = x^t q x`: `Φ(a)^t φ(q) Φ(a) = Φ₀(a^t q a)`, checked at
/// precision `N − 1`.  With `base` standard the right side is `(a^t q a)^{(p)}`.
pub fn verify_h_horizontal(
    lift: &FrobeniusLift,
    base: &FrobeniusLift,
    q: &PMatrix,
    sign: Sign,
    samples: &[PMatrix],
) -> Result<VerifyReport> {
    check_form(q, sign)?;
    let fq = q.frobenius(1);
    Ok(run("H-horizontal", target_of(q), samples, |a| {
        let phi = lift.evaluate(a)?;
        let lhs = &(&phi.transpose() * &fq) * &phi;
        let rhs = base.evaluate(&(&(&a.transpose() * q) * a))?;
        Ok((lhs, rhs))
    }))
}

/// `B_q`-symmetry of `lift` with respect to `base`:
/// `Φ₀(a)^t φ(q) Φ(a) = Φ(a)^t φ(q) Φ₀(a)`, checked at precision `N − 1`.
pub fn verify_b_symmetric(
    lift: &FrobeniusLift,
    base: &FrobeniusLift,
    q: &PMatrix,
    sign: Sign,
    samples: &[PMatrix],
) -> Result<VerifyReport> {
    check_form(q, sign)?;
    let fq = q.frobenius(1);
    Ok(run("B-symmetric", target_of(q), samples, |a| {
        let phi = lift.evaluate(a)?;
        let phi0 = base.evaluate(a)?;
        let lhs = &(&phi0.transpose() * &fq) * &phi;
        let rhs = &(&phi.transpose() * &fq) * &phi0;
        Ok((lhs, rhs))
    }))
}

/// A function on `GL_n` that may be a prime integral of a δ-flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeIntegral {
    /// `u ↦ u^t q u`.
    Hq(PMatrix),
    /// `u ↦ q⁻¹u^t q u`; agrees with `Hq` up to a constant factor, and is a
    /// prime integral when that factor is fixed by `φ` and by the p-power map,
    /// e.g. for the split forms.
    HqNormalized(PMatrix),
    /// `u ↦ det(u)`.
    Det,
    /// `u ↦ (P_1(u), …, P_n(u))`.
    CharPoly,
}

impl PrimeIntegral {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeIntegral::Hq(_) => "H_q",
            PrimeIntegral::HqNormalized(_) => "q^-1 H_q",
            PrimeIntegral::Det => "det",
            PrimeIntegral::CharPoly => "charpoly",
        }
    }

    /// The values of the integral at `u`, as a list of scalars.
    pub fn values(&self, u: &PMatrix) -> Result<Vec<padic_core::PadicScalar>> {
        Ok(match self {
            PrimeIntegral::Hq(q) => (&(&u.transpose() * q) * u).entries().to_vec(),
            PrimeIntegral::HqNormalized(q) => (&(&(&q.inverse()? * &u.transpose()) * q) * u).entries().to_vec(),
            PrimeIntegral::Det => vec![u.det()],
            PrimeIntegral::CharPoly => char_poly(u).p[1..].to_vec(),
        })
    }
}

/// Whether `δ(H(u)) = 0` at the precision of `δ(H(u))` (one digit below
/// that of `u`).  `u` must lie in the domain of `lift`.
pub fn verify_prime_integral(lift: &FrobeniusLift, kind: &PrimeIntegral, u: &PMatrix) -> Result<bool> {
    lift.evaluate(u).map_err(|e| Error::DomainError(format!("point outside the lift's domain: {e}")))?;
    for v in kind.values(u)? {
        if !v.delta()?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
