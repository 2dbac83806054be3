use padic_core::{Error, Result};
use padic_linalg::PMatrix;

/// A point `(a₀, a₁)` of the first jet group `J¹(GL_n) ≅ GL_n × 𝔤𝔩_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetPoint {
    pub a0: PMatrix,
    pub a1: PMatrix,
}

/// `(u^{(p)} v^{(p)} − (uv)^{(p)}) / p`, the carry of the entrywise p-power.
fn carry(u: &PMatrix, v: &PMatrix) -> Result<PMatrix> {
    (&(&u.p_power() * &v.p_power()) - &(u * v).p_power()).div_p_exact(1)
}

impl JetPoint {
    pub fn new(a0: PMatrix, a1: PMatrix) -> Result<Self> {
        a0.check_compatible(&a1)?;
        if !a0.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(JetPoint { a0, a1 })
    }

    /// The identity `(1, 0)`.
    pub fn identity(a: &PMatrix) -> Self {
        JetPoint { a0: PMatrix::identity(a.ctx(), a.n()), a1: PMatrix::zero(a.ctx(), a.n()) }
    }

    /// `∇¹(a) = (a, δa)`.
    pub fn nabla(a: &PMatrix) -> Result<Self> {
        JetPoint::new(a.clone(), a.delta()?)
    }

    /// `σ(a) = (a, Δ(a))` for the lift with value `Φ(a) = phi_a`.
    pub fn sigma(a: &PMatrix, phi_a: &PMatrix) -> Result<Self> {
        JetPoint::new(a.clone(), (phi_a - &a.p_power()).div_p_exact(1)?)
    }

    /// The group law
    /// `(a₀,a₁)∘(b₀,b₁) = (a₀b₀, a₀^{(p)}b₁ + a₁b₀^{(p)} + p a₁b₁ + (a₀^{(p)}b₀^{(p)} − (a₀b₀)^{(p)})/p)`.
    pub fn mul(&self, other: &JetPoint) -> Result<JetPoint> {
        self.a0.check_compatible(&other.a0)?;
        let (a0, a1, b0, b1) = (&self.a0, &self.a1, &other.a0, &other.a1);
        let second = &(&(&(&a0.p_power() * b1) + &(a1 * &b0.p_power())) + &(a1 * b1).mul_p_pow(1))
            + &carry(a0, b0)?;
        Ok(JetPoint { a0: a0 * b0, a1: second })
    }

    /// The inverse
    /// `(a₀⁻¹, −(a₀^{(p)} + p a₁)⁻¹ (a₁ (a₀⁻¹)^{(p)} + (a₀^{(p)}(a₀⁻¹)^{(p)} − 1)/p))`.
    pub fn inv(&self) -> Result<JetPoint> {
        let a0_inv = self.a0.inverse()?;
        let ghost = &self.a0.p_power() + &self.a1.mul_p_pow(1);
        let one = PMatrix::identity(self.a0.ctx(), self.a0.n());
        let c = (&(&self.a0.p_power() * &a0_inv.p_power()) - &one).div_p_exact(1)?;
        let inner = &(&self.a1 * &a0_inv.p_power()) + &c;
        Ok(JetPoint { a0: a0_inv, a1: -(&ghost.inverse()? * &inner) })
    }

    /// Ghost coordinates `w(a₀, a₁) = (a₀, a₀^{(p)} + p a₁)`.
    pub fn ghost(&self) -> (PMatrix, PMatrix) {
        (self.a0.clone(), &self.a0.p_power() + &self.a1.mul_p_pow(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn identity_and_ghost() {
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 1], &[3, 3]]);
        let e = JetPoint::identity(&a);
        let (g0, g1) = e.ghost();
        assert_eq!(g0, PMatrix::identity(&ctx, 2));
        assert_eq!(g1, PMatrix::identity(&ctx, 2));
        let x = JetPoint::nabla(&a).unwrap();
        let left = e.mul(&x).unwrap();
        assert!(left.a0 == x.a0 && left.a1.agrees_to(&x.a1, 5));
        // the ghost of ∇¹a is (a, φ(a)); for f = 1, φ(a) = a
        assert!(x.ghost().1.agrees_to(&a, 6));
    }

    #[test]
    fn inverse_of_nabla() {
        let ctx = PadicContext::new(3, 2, 7).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 1, 0], &[3, 4, 1], &[1, 0, 2]]);
        let x = JetPoint::nabla(&a).unwrap();
        let prod = x.mul(&x.inv().unwrap()).unwrap();
        assert_eq!(prod.a0, PMatrix::identity(&ctx, 3));
        assert!(prod.a1.agrees_to(&PMatrix::zero(&ctx, 3), 6));
    }
}
