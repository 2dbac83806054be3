use delta_jet::{check_form, DeltaLieElement, Sign};
use inner_lifts::{charpoly_lift_eval, conjugation_lift_eval};
use padic_core::{Ctx, Error, PadicScalar, Result};
use padic_linalg::{principal_root_matrix, root_by_newton, PMatrix};

use crate::hermitian::{check_hermitian_form, is_in_centralizer};

/// A lift of Frobenius on `GL_n`, evaluated pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobeniusLift {
    /// `x ↦ x^{(p)}`.
    Standard(usize),
    /// `x ↦ x^{(p)}Λ(x)` with `Λ(x) = (A⁻¹B)^{1/2}`,
    /// `A = (x^{(p)})^t φ(q) x^{(p)}` and `B = (x^t q x)^{(p)}`.
    Chern { q: PMatrix, sign: Sign },
    /// `x ↦ λ(x)x^{(p)}` with `λ(x) = (det(x^{(p)}) / det(x)^p)^{−1/n}`.
    SpecialLinear(usize),
    /// The Chern lift of a hermitian form `q = [[q₁, q₂], [−q₂, q₁]]`
    /// restricted to the centralizer `GL_r^c` of `[[0, 1_r], [−1_r, 0]]`.
    Hermitian { q: PMatrix },
    /// The lift horizontal for conjugation, defined on regular matrices.
    Conjugation(usize),
    /// The lift sending each characteristic polynomial coefficient `P_i`
    /// to `P_i^p`, defined where `D**` is a unit.
    CharPoly(usize),
    /// `x ↦ (1 + pα)·Φ(x)` for an order-one δ-Lie element `α`.
    Twist { alpha: DeltaLieElement, base: Box<FrobeniusLift> },
    /// `x ↦ ε·Φ(x)·ε⁻¹` with `ε = 1 + pα`; preserves any conjugation
    /// invariant the base lift preserves.
    InnerTwist { alpha: PMatrix, base: Box<FrobeniusLift> },
    /// `x ↦ Φ(x) + p·offset`.  Still a lift of Frobenius, but it breaks
    /// every horizontality property of the base; used as a negative control.
    Perturbed { offset: PMatrix, base: Box<FrobeniusLift> },
}

impl FrobeniusLift {
    /// The Chern lift of `q`, checking `q^t = sign·q` and invertibility.
    pub fn chern(q: PMatrix, sign: Sign) -> Result<Self> {
        check_form(&q, sign)?;
        Ok(FrobeniusLift::Chern { q, sign })
    }

    /// The special-linear lift; needs `p ∤ n`.
    pub fn special_linear(ctx: &Ctx, n: usize) -> Result<Self> {
        if n == 0 || n as u64 % ctx.p() == 0 {
            return Err(Error::PDividesN { n });
        }
        Ok(FrobeniusLift::SpecialLinear(n))
    }

    /// The hermitian lift of `q`; `q` must be symmetric, invertible and
    /// commute with `[[0, 1_r], [−1_r, 0]]`.
    pub fn hermitian(q: PMatrix) -> Result<Self> {
        check_hermitian_form(&q)?;
        Ok(FrobeniusLift::Hermitian { q })
    }

    /// `(1 + pα)·base`.
    pub fn twist(alpha: DeltaLieElement, base: FrobeniusLift) -> Result<Self> {
        if alpha.order != 1 {
            return Err(Error::OrderMismatch { left: alpha.order, right: 1 });
        }
        check_dim(base.n(), alpha.mat.n())?;
        Ok(FrobeniusLift::Twist { alpha, base: Box::new(base) })
    }

    /// `ε·base·ε⁻¹` with `ε = 1 + pα`.
    pub fn inner_twist(alpha: PMatrix, base: FrobeniusLift) -> Result<Self> {
        check_dim(base.n(), alpha.n())?;
        Ok(FrobeniusLift::InnerTwist { alpha, base: Box::new(base) })
    }

    /// `base + p·offset`.
    pub fn perturbed(offset: PMatrix, base: FrobeniusLift) -> Result<Self> {
        check_dim(base.n(), offset.n())?;
        Ok(FrobeniusLift::Perturbed { offset, base: Box::new(base) })
    }

    /// The size `n` of the matrices the lift acts on.
    pub fn n(&self) -> usize {
        match self {
            FrobeniusLift::Standard(n)
            | FrobeniusLift::SpecialLinear(n)
            | FrobeniusLift::Conjugation(n)
            | FrobeniusLift::CharPoly(n) => *n,
            FrobeniusLift::Chern { q, .. } | FrobeniusLift::Hermitian { q } => q.n(),
            FrobeniusLift::Twist { base, .. }
            | FrobeniusLift::InnerTwist { base, .. }
            | FrobeniusLift::Perturbed { base, .. } => base.n(),
        }
    }

    /// Short name used in reports and descriptors.
    pub fn kind(&self) -> &'static str {
        match self {
            FrobeniusLift::Standard(_) => "standard",
            FrobeniusLift::Chern { .. } => "chern",
            FrobeniusLift::SpecialLinear(_) => "sl",
            FrobeniusLift::Hermitian { .. } => "hermitian",
            FrobeniusLift::Conjugation(_) => "conjugation",
            FrobeniusLift::CharPoly(_) => "charpoly",
            FrobeniusLift::Twist { .. } => "twist",
            FrobeniusLift::InnerTwist { .. } => "isospectral",
            FrobeniusLift::Perturbed { .. } => "perturbed",
        }
    }

    /// `Φ(a)`.
    pub fn evaluate(&self, a: &PMatrix) -> Result<PMatrix> {
        check_dim(self.n(), a.n())?;
        if !a.is_invertible() {
            return Err(Error::NotInvertible);
        }
        match self {
            FrobeniusLift::Standard(_) => Ok(a.p_power()),
            FrobeniusLift::Chern { q, .. } => Ok(&a.p_power() * &chern_lambda(q, a)?),
            FrobeniusLift::SpecialLinear(n) => Ok(a.p_power().scale(&sl_lambda(a, *n)?)),
            FrobeniusLift::Hermitian { q } => {
                if !is_in_centralizer(a) {
                    return Err(Error::NotInCentralizer);
                }
                Ok(&a.p_power() * &chern_lambda(q, a)?)
            }
            FrobeniusLift::Conjugation(_) => conjugation_lift_eval(a),
            FrobeniusLift::CharPoly(_) => {
                let target = a.p_power().prec();
                Ok(charpoly_lift_eval(a, target)?.phi)
            }
            FrobeniusLift::Twist { alpha, base } => Ok(&alpha.unit() * &base.evaluate(a)?),
            FrobeniusLift::InnerTwist { alpha, base } => {
                let eps = epsilon(alpha);
                Ok(&(&eps * &base.evaluate(a)?) * &eps.inverse()?)
            }
            FrobeniusLift::Perturbed { offset, base } => Ok(&base.evaluate(a)? + &offset.mul_p_pow(1)),
        }
    }

    /// The Christoffel symbol `Δ(a) = (Φ(a) − a^{(p)})/p`.
    pub fn christoffel(&self, a: &PMatrix) -> Result<PMatrix> {
        (&self.evaluate(a)? - &a.p_power()).div_p_exact(1)
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch(format!("lift acts on {expected}x{expected} matrices, got {got}x{got}")));
    }
    Ok(())
}

fn epsilon(alpha: &PMatrix) -> PMatrix {
    &PMatrix::identity(alpha.ctx(), alpha.n()) + &alpha.mul_p_pow(1)
}

/// `A = (x^{(p)})^t φ(q) x^{(p)}` and `B = (x^t q x)^{(p)}`; they agree mod `p`.
fn chern_pair(q: &PMatrix, x: &PMatrix) -> (PMatrix, PMatrix) {
    let xp = x.p_power();
    let a = &(&xp.transpose() * &q.frobenius(1)) * &xp;
    let b = (&(&x.transpose() * q) * x).p_power();
    (a, b)
}

/// `Λ(x)`, the principal square root of `A⁻¹B = 1 + pA⁻¹C` with
/// `C = (B − A)/p`, by the binomial series.
pub fn chern_lambda(q: &PMatrix, x: &PMatrix) -> Result<PMatrix> {
    x.check_compatible(q)?;
    let (a, b) = chern_pair(q, x);
    let one = PMatrix::identity(x.ctx(), x.n());
    let c = (&b - &a).div_p_exact(1)?;
    let ratio = &one + &(&a.inverse()? * &c).mul_p_pow(1);
    principal_root_matrix(&ratio, 2)
}

/// `Λ(x)` as the Newton–Hensel root of `Λ² = A⁻¹B` starting from `Λ = 1`;
/// an independent evaluator for cross-checking [`chern_lambda`].
pub fn chern_lambda_newton(q: &PMatrix, x: &PMatrix) -> Result<PMatrix> {
    x.check_compatible(q)?;
    let (a, b) = chern_pair(q, x);
    root_by_newton(&(&a.inverse()? * &b), 2)
}

/// `λ(x) = (det(x^{(p)}) / det(x)^p)^{−1/n}`, the scalar with
/// `det(λ(x)x^{(p)}) = det(x)^p`.
pub fn sl_lambda(x: &PMatrix, n: usize) -> Result<PadicScalar> {
    let ratio = &x.p_power().det() * &x.det().pow_p().inv()?;
    ratio.principal_root(-(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn standard_is_p_power() {
        let ctx = PadicContext::new(5, 2, 6).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 1], &[3, 3]]);
        let lift = FrobeniusLift::Standard(2);
        assert_eq!(lift.evaluate(&a).unwrap(), a.p_power());
        assert!(lift.christoffel(&a).unwrap().is_zero());
    }

    #[test]
    fn chern_scalar_at_one() {
        // Oracle: for n = 1, Λ(1)² = q^p/q = 2^4 = 16 and the square root
        // ≡ 1 mod 5 is −4 since (−4)² = 16.
        let ctx = PadicContext::new(5, 1, 8).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[2]]);
        let lift = FrobeniusLift::chern(q, Sign::Plus).unwrap();
        let phi = lift.evaluate(&PMatrix::identity(&ctx, 1)).unwrap();
        assert_eq!(phi.get(0, 0).to_balanced_i128(), Some(-4));
    }

    #[test]
    fn chern_on_monomial_split_is_p_power() {
        let ctx = PadicContext::new(7, 1, 6).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[0, 1], &[-1, 0]]);
        let lift = FrobeniusLift::chern(q.clone(), Sign::Minus).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[0, 3], &[5, 0]]);
        assert!(chern_lambda(&q, &m).unwrap().agrees_to(&PMatrix::identity(&ctx, 2), 6));
        assert_eq!(lift.evaluate(&m).unwrap(), m.p_power());
    }

    #[test]
    fn constructor_errors() {
        let ctx = PadicContext::new(3, 1, 5).unwrap();
        let q = PMatrix::from_i64(&ctx, &[&[1, 2], &[0, 1]]);
        assert_eq!(FrobeniusLift::chern(q, Sign::Plus).unwrap_err().kind(), "SymmetryMismatch");
        assert_eq!(FrobeniusLift::special_linear(&ctx, 3).unwrap_err().kind(), "PDividesN");
        let lift = FrobeniusLift::Standard(2);
        let singular = PMatrix::from_i64(&ctx, &[&[1, 1], &[1, 1]]);
        assert_eq!(lift.evaluate(&singular).unwrap_err().kind(), "NotInvertible");
        let wrong = PMatrix::identity(&ctx, 3);
        assert_eq!(lift.evaluate(&wrong).unwrap_err().kind(), "DimensionMismatch");
    }

    #[test]
    fn special_linear_preserves_det_power() {
        let ctx = PadicContext::new(5, 1, 7).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 1, 0], &[3, 4, 1], &[1, 0, 2]]);
        let lift = FrobeniusLift::special_linear(&ctx, 3).unwrap();
        let phi = lift.evaluate(&a).unwrap();
        assert_eq!(phi.det(), a.det().pow_p());
    }

    #[test]
    fn twist_multiplies_by_epsilon() {
        let ctx = PadicContext::new(3, 1, 6).unwrap();
        let alpha = DeltaLieElement::order_one(PMatrix::from_i64(&ctx, &[&[1, 0], &[2, 1]]));
        let lift = FrobeniusLift::twist(alpha.clone(), FrobeniusLift::Standard(2)).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[1, 1], &[0, 1]]);
        assert_eq!(lift.evaluate(&a).unwrap(), &alpha.unit() * &a.p_power());
        // Δ^α = αΦ + Δ, and Δ = 0 for the standard lift.
        assert!(lift.christoffel(&a).unwrap().agrees_to(&(&alpha.mat * &a.p_power()), 5));
    }
}
