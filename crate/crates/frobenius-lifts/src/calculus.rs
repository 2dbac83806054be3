use delta_jet::DeltaLieElement;
use padic_core::Result;
use padic_linalg::PMatrix;

use crate::lift::FrobeniusLift;

/// The arithmetic logarithmic derivative `lδa = (φ(a)Φ(a)⁻¹ − 1)/p`, where
/// `φ` is the entrywise Frobenius and `Φ` the lift.
pub fn log_derivative(lift: &FrobeniusLift, a: &PMatrix) -> Result<DeltaLieElement> {
    let ratio = &a.frobenius(1) * &lift.evaluate(a)?.inverse()?;
    DeltaLieElement::from_unit(&ratio, 1)
}

/// The same derivative through the Christoffel symbol:
/// `lδa = (δa − Δ(a))(a^{(p)} + pΔ(a))⁻¹`.
pub fn log_derivative_christoffel_form(lift: &FrobeniusLift, a: &PMatrix) -> Result<DeltaLieElement> {
    let delta = lift.christoffel(a)?;
    let phi = &a.p_power() + &delta.mul_p_pow(1);
    Ok(DeltaLieElement::order_one(&(&a.delta()? - &delta) * &phi.inverse()?))
}

/// The cocycle defect `{a, b} = (Φ(a)Φ(b)Φ(ab)⁻¹ − 1)/p`, for which
/// `lδ(ab) = (φ(a)·lδ(b)·φ(a)⁻¹) +_δ lδ(a) +_δ {a, b}`.
pub fn cocycle_defect(lift: &FrobeniusLift, a: &PMatrix, b: &PMatrix) -> Result<DeltaLieElement> {
    let ab = a * b;
    let ratio = &(&lift.evaluate(a)? * &lift.evaluate(b)?) * &lift.evaluate(&ab)?.inverse()?;
    DeltaLieElement::from_unit(&ratio, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn standard_log_derivative() {
        let ctx = PadicContext::new(5, 2, 7).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 1], &[3, 3]]);
        let lift = FrobeniusLift::Standard(2);
        let l = log_derivative(&lift, &a).unwrap();
        let expected = &a.delta().unwrap() * &a.p_power().inverse().unwrap();
        assert!(l.mat.agrees_to(&expected, 6));
        assert!(log_derivative_christoffel_form(&lift, &a).unwrap().mat.agrees_to(&expected, 6));
    }

    #[test]
    fn cocycle_with_identity() {
        let ctx = PadicContext::new(3, 1, 6).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[1, 1], &[1, 2]]);
        let one = PMatrix::identity(&ctx, 2);
        let std = FrobeniusLift::Standard(2);
        assert!(cocycle_defect(&std, &a, &one).unwrap().mat.is_zero());
        // {a, 1} = (Φ(a)Φ(1)Φ(a)⁻¹ − 1)/p vanishes only when Φ(1) = 1; for a
        // form with δq ≢ 0 the Chern lift moves the identity.
        let q = PMatrix::from_i64(&ctx, &[&[2, 1], &[1, 1]]);
        let chern = FrobeniusLift::chern(q, delta_jet::Sign::Plus).unwrap();
        let phi1 = chern.evaluate(&one).unwrap();
        let defect = cocycle_defect(&chern, &one, &one).unwrap();
        assert!(defect.unit().agrees_to(&phi1, 6));
        assert!(!defect.mat.is_zero());
    }
}
