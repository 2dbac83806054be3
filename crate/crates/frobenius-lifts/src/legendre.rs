use delta_jet::{check_form, Sign};
use padic_core::Result;
use padic_linalg::{principal_root_matrix, PMatrix};

/// The matrix Legendre symbol: the value `Φ(1)` of the Chern lift of `q`,
/// computed directly as `(1 + p(q^{(p)})⁻¹δq)^{−1/2}` by the binomial series.
///
/// For `n = 1` and integral `q` this is `q^{(p−1)/2}·(q/p)`: the unit with
/// square `q^{p−1}` that is `≡ 1 (mod p)`.
pub fn legendre_matrix(q: &PMatrix, sign: Sign) -> Result<PMatrix> {
    check_form(q, sign)?;
    let one = PMatrix::identity(q.ctx(), q.n());
    let correction = &q.p_power().inverse()? * &q.delta()?;
    principal_root_matrix(&(&one + &correction.mul_p_pow(1)), -2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FrobeniusLift;
    use padic_core::PadicContext;

    #[test]
    fn split_forms_give_identity() {
        let ctx = PadicContext::new(5, 2, 6).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[0, 1], &[-1, 0]]);
        assert_eq!(legendre_matrix(&q, Sign::Minus).unwrap(), PMatrix::identity(&ctx, 2));
    }

    #[test]
    fn five_two() {
        let ctx = PadicContext::new(5, 1, 10).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[2]]);
        let phi1 = legendre_matrix(&q, Sign::Plus).unwrap();
        assert_eq!(phi1.get(0, 0).to_balanced_i128(), Some(-4));
    }

    #[test]
    fn agrees_with_chern_at_identity() {
        let ctx = PadicContext::new(3, 2, 7).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[2, 1, 0], &[1, 4, 0], &[0, 0, 1]]);
        let lift = FrobeniusLift::chern(q.clone(), Sign::Plus).unwrap();
        let one = PMatrix::identity(&ctx, 3);
        assert!(legendre_matrix(&q, Sign::Plus).unwrap().agrees_to(&lift.evaluate(&one).unwrap(), 6));
    }
}
