use frobenius_lifts::verify::PrimeIntegral;
use padic_core::Result;
use padic_linalg::PMatrix;
use serde::{Deserialize, Serialize};

use crate::problem::DeltaLinearProblem;

/// Result of checking `δ(H(u)) = 0` for one function `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub integral: String,
    /// Precision at which `δ(H(u))` was required to vanish.
    pub prec: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// Checks `δ(H(u)) = 0` at precision `min(N − 2, prec(u) − 1)` for each
/// listed function `H`.
pub fn audit_prime_integrals(
    u: &PMatrix,
    problem: &DeltaLinearProblem,
    integrals: &[PrimeIntegral],
) -> Result<AuditReport> {
    let prec = problem.ctx().precision().saturating_sub(2).min(u.prec().saturating_sub(1));
    let mut entries = Vec::new();
    for h in integrals {
        let mut holds = true;
        for v in h.values(u)? {
            let d = v.delta()?;
            holds &= d.prec() >= prec && d.with_prec(prec).is_zero();
        }
        entries.push(AuditEntry { integral: h.name().to_string(), prec, holds });
    }
    Ok(AuditReport { entries })
}
