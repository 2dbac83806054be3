use padic_core::{Error, Result};
use padic_linalg::{hensel_eigen, PMatrix};

/// A regular matrix `m = x⁻¹tx` together with an eigendecomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularPoint {
    pub m: PMatrix,
    pub t: PMatrix,
    pub x: PMatrix,
}

impl RegularPoint {
    pub fn new(m: &PMatrix) -> Result<Self> {
        let (t, x) = hensel_eigen(m)?;
        Ok(RegularPoint { m: m.clone(), t, x })
    }
}

/// `Φ*` evaluated from an explicit pair `(t, x)` with `t` diagonal regular
/// and `x` invertible: `A(t,x) = (x^{(p)})⁻¹ t^{(p)} x^{(p)}`.
///
/// The lift is `m^{(p)}Λ(m)` with `Λ = B⁻¹A`, `B = (x⁻¹tx)^{(p)} = m^{(p)}`,
/// so its value is `A` itself.
pub fn conjugation_lift_from_pair(t: &PMatrix, x: &PMatrix) -> Result<PMatrix> {
    if !t.is_diagonal() {
        return Err(Error::DomainError("t must be diagonal".into()));
    }
    let xp = x.p_power();
    Ok(&(&xp.inverse()? * &t.p_power()) * &xp)
}

/// `Φ*(m)` for a regular matrix whose characteristic polynomial splits over
/// the residue field.
pub fn conjugation_lift_eval(m: &PMatrix) -> Result<PMatrix> {
    let pt = RegularPoint::new(m)?;
    conjugation_lift_from_pair(&pt.t, &pt.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn diagonal_points_map_to_p_powers() {
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let t = PMatrix::from_i64(&ctx, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(conjugation_lift_eval(&t).unwrap(), t.p_power());
    }

    #[test]
    fn non_split_is_reported() {
        let ctx = PadicContext::new(3, 1, 6).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[0, -1], &[1, 0]]);
        assert_eq!(conjugation_lift_eval(&m).unwrap_err().kind(), "CharPolyDoesNotSplit");
    }
}
