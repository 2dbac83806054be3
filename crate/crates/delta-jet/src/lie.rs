use padic_core::{Error, Result};
use padic_linalg::PMatrix;

/// An element of the order-`r` δ-Lie algebra `L_δ^r(GL_n)`: a matrix under
/// the group law `a +_{δ,r} b = a + b + p^r ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaLieElement {
    pub mat: PMatrix,
    pub order: u32,
}

impl DeltaLieElement {
    pub fn new(mat: PMatrix, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::DomainError("δ-Lie algebra order must be ≥ 1".into()));
        }
        Ok(DeltaLieElement { mat, order })
    }

    /// Order-1 element.
    pub fn order_one(mat: PMatrix) -> Self {
        DeltaLieElement { mat, order: 1 }
    }

    pub fn zero(like: &PMatrix, order: u32) -> Self {
        DeltaLieElement { mat: PMatrix::zero(like.ctx(), like.n()), order }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        self.mat.check_compatible(&other.mat)
    }

    /// `1 + p^r a`, the unit whose multiplication realizes `+_{δ,r}`.
    pub fn unit(&self) -> PMatrix {
        &PMatrix::identity(self.mat.ctx(), self.mat.n()) + &self.mat.mul_p_pow(self.order)
    }

    /// Recovers `a` from `1 + p^r a`.
    pub fn from_unit(u: &PMatrix, order: u32) -> Result<Self> {
        let one = PMatrix::identity(u.ctx(), u.n());
        DeltaLieElement::new((u - &one).div_p_exact(order)?, order)
    }

    /// `a +_{δ,r} b = a + b + p^r ab`.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mat = &(&self.mat + &other.mat) + &(&self.mat * &other.mat).mul_p_pow(self.order);
        Ok(DeltaLieElement { mat, order: self.order })
    }

    /// The `+_{δ,r}`-inverse `−a(1 + p^r a)⁻¹`.
    pub fn neg(&self) -> Result<Self> {
        let mat = -(&self.mat * &self.unit().inverse()?);
        Ok(DeltaLieElement { mat, order: self.order })
    }

    /// `a −_{δ,r} b = a +_{δ,r} (−_{δ,r} b)`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.plus(&other.neg()?)
    }

    /// The adjoint action `a ⋆_δ b = φ(a)·b·φ(a)⁻¹`.
    pub fn star(a: &PMatrix, b: &Self) -> Result<Self> {
        a.check_compatible(&b.mat)?;
        let fa = a.frobenius(1);
        let mat = &(&fa * &b.mat) * &fa.inverse()?;
        Ok(DeltaLieElement { mat, order: b.order })
    }

    /// The δ-bracket of orders `r` and `s`, landing in order `r + s`:
    /// `(XYX⁻¹Y⁻¹ − 1)/p^{r+s}` with `X = 1 + p^r φ^s(α)`, `Y = 1 + p^s φ^r(β)`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.mat.check_compatible(&other.mat)?;
        let (r, s) = (self.order, other.order);
        let available = self.mat.prec().min(other.mat.prec());
        if r + s >= available {
            return Err(Error::InsufficientPrecision { needed: r + s + 1, available });
        }
        let one = PMatrix::identity(self.mat.ctx(), self.mat.n());
        let x = &one + &self.mat.frobenius(s as i64).mul_p_pow(r);
        let y = &one + &other.mat.frobenius(r as i64).mul_p_pow(s);
        let comm = &(&(&x * &y) * &x.inverse()?) * &y.inverse()?;
        Ok(DeltaLieElement { mat: (&comm - &one).div_p_exact(r + s)?, order: r + s })
    }

    /// `ex^r(α) = 1 + p^r φ^{−r}(α)`.
    pub fn ex(&self) -> PMatrix {
        let one = PMatrix::identity(self.mat.ctx(), self.mat.n());
        &one + &self.mat.frobenius(-(self.order as i64)).mul_p_pow(self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::{PadicContext, PadicScalar};

    #[test]
    fn scalar_group_law() {
        // 1 +_δ 1 = 1 + 1 + 3 at p = 3
        let ctx = PadicContext::new(3, 1, 6).unwrap();
        let one = DeltaLieElement::order_one(PMatrix::identity(&ctx, 1));
        let two = one.plus(&one).unwrap();
        assert_eq!(two.mat.get(0, 0), &PadicScalar::from_i64(&ctx, 5));
        let z = two.plus(&two.neg().unwrap()).unwrap();
        assert!(z.mat.is_zero());
    }

    #[test]
    fn order_mismatch() {
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let a = DeltaLieElement::new(PMatrix::identity(&ctx, 2), 1).unwrap();
        let b = DeltaLieElement::new(PMatrix::identity(&ctx, 2), 2).unwrap();
        assert_eq!(a.plus(&b).unwrap_err().kind(), "OrderMismatch");
    }

    #[test]
    fn bracket_with_zero_and_self() {
        let ctx = PadicContext::new(5, 2, 8).unwrap();
        let a = DeltaLieElement::new(PMatrix::from_i64(&ctx, &[&[1, 2], &[3, 4]]), 2).unwrap();
        let z = DeltaLieElement::zero(&a.mat, 1);
        assert!(a.bracket(&z).unwrap().mat.is_zero());
        assert!(a.bracket(&a).unwrap().mat.is_zero());
        assert_eq!(a.bracket(&a).unwrap().order, 4);
    }

    #[test]
    fn ex_is_one_plus_p_alpha_for_prime_field() {
        let ctx = PadicContext::new(7, 1, 5).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[1, 2], &[3, 4]]);
        let a = DeltaLieElement::new(m.clone(), 2).unwrap();
        assert_eq!(a.ex(), &PMatrix::identity(&ctx, 2) + &m.mul_p_pow(2));
        assert_eq!(DeltaLieElement::zero(&m, 1).ex(), PMatrix::identity(&ctx, 2));
    }

    #[test]
    fn star_fixes_commuting_diagonals() {
        let ctx = PadicContext::new(5, 1, 5).unwrap();
        let a = PMatrix::from_i64(&ctx, &[&[2, 0], &[0, 3]]);
        let b = DeltaLieElement::order_one(PMatrix::from_i64(&ctx, &[&[7, 0], &[0, -1]]));
        assert_eq!(DeltaLieElement::star(&a, &b).unwrap(), b);
    }
}
