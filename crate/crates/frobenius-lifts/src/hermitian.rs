use padic_core::{Ctx, Error, PadicScalar, Result};
use padic_linalg::PMatrix;

/// A point `z = [[a, b], [−b, a]]` of `GL_r^c ⊂ GL_{2r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianPoint {
    pub a: PMatrix,
    pub b: PMatrix,
}

/// `q₀ = [[0, 1_r], [−1_r, 0]]`, whose centralizer is `GL_r^c`.
pub fn centralizer_unit(ctx: &Ctx, r: usize) -> PMatrix {
    PMatrix::from_fn(ctx, 2 * r, |i, j| {
        let v = if j == i + r {
            1
        } else if i == j + r {
            -1
        } else {
            0
        };
        PadicScalar::from_i64(ctx, v)
    })
}

/// Whether `z` (of even size) commutes with `q₀`, i.e. has the block shape
/// `[[a, b], [−b, a]]`.
pub fn is_in_centralizer(z: &PMatrix) -> bool {
    if z.n() % 2 != 0 {
        return false;
    }
    let q0 = centralizer_unit(z.ctx(), z.n() / 2);
    (&(z * &q0) - &(&q0 * z)).is_zero()
}

/// `[[q₁, q₂], [−q₂, q₁]]`; symmetric exactly when `q₁` is symmetric and
/// `q₂` antisymmetric.
pub fn hermitian_form(q1: &PMatrix, q2: &PMatrix) -> Result<PMatrix> {
    Ok(HermitianPoint::new(q1.clone(), q2.clone())?.embed())
}

pub(crate) fn check_hermitian_form(q: &PMatrix) -> Result<()> {
    if !is_in_centralizer(q) {
        return Err(Error::NotInCentralizer);
    }
    delta_jet::check_form(q, delta_jet::Sign::Plus)
}

impl HermitianPoint {
    pub fn new(a: PMatrix, b: PMatrix) -> Result<Self> {
        a.check_compatible(&b)?;
        Ok(HermitianPoint { a, b })
    }

    pub fn r(&self) -> usize {
        self.a.n()
    }

    /// `[[a, b], [−b, a]]`.
    pub fn embed(&self) -> PMatrix {
        let r = self.r();
        PMatrix::from_fn(self.a.ctx(), 2 * r, |i, j| match (i < r, j < r) {
            (true, true) => self.a.get(i, j).clone(),
            (true, false) => self.b.get(i, j - r).clone(),
            (false, true) => -self.b.get(i - r, j),
            (false, false) => self.a.get(i - r, j - r).clone(),
        })
    }

    /// Inverse of [`HermitianPoint::embed`] on the centralizer of `q₀`.
    pub fn project(z: &PMatrix) -> Result<Self> {
        if !is_in_centralizer(z) {
            return Err(Error::NotInCentralizer);
        }
        let r = z.n() / 2;
        let a = PMatrix::from_fn(z.ctx(), r, |i, j| z.get(i, j).clone());
        let b = PMatrix::from_fn(z.ctx(), r, |i, j| z.get(i, j + r).clone());
        Ok(HermitianPoint { a, b })
    }

    /// `z^c = a + √−1·b`; needs a square root of `−1` in the ring.
    pub fn c_map(&self) -> Result<PMatrix> {
        let i = PadicScalar::sqrt_minus_one(self.a.ctx())?;
        Ok(&self.a + &self.b.scale(&i))
    }

    /// The product in `GL_r^c`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.a.check_compatible(&other.a)?;
        let a = &(&self.a * &other.a) - &(&self.b * &other.b);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(HermitianPoint { a, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn identity_embeds_to_identity() {
        let ctx = PadicContext::new(5, 1, 5).unwrap();
        let h = HermitianPoint::new(PMatrix::identity(&ctx, 2), PMatrix::zero(&ctx, 2)).unwrap();
        assert_eq!(h.embed(), PMatrix::identity(&ctx, 4));
        assert_eq!(h.c_map().unwrap(), PMatrix::identity(&ctx, 2));
        assert_eq!(HermitianPoint::project(&h.embed()).unwrap(), h);
    }

    #[test]
    fn c_map_needs_sqrt_minus_one() {
        let ctx = PadicContext::new(3, 1, 5).unwrap();
        let h = HermitianPoint::new(PMatrix::identity(&ctx, 1), PMatrix::zero(&ctx, 1)).unwrap();
        assert_eq!(h.c_map().unwrap_err().kind(), "NoSqrtMinusOne");
        // Over F_9, −1 is a square.
        let ctx = PadicContext::new(3, 2, 5).unwrap();
        let h = HermitianPoint::new(PMatrix::identity(&ctx, 1), PMatrix::zero(&ctx, 1)).unwrap();
        assert!(h.c_map().is_ok());
    }

    #[test]
    fn project_rejects_outside_centralizer() {
        let ctx = PadicContext::new(5, 1, 5).unwrap();
        let z = PMatrix::from_i64(&ctx, &[&[1, 2], &[3, 4]]);
        assert_eq!(HermitianPoint::project(&z).unwrap_err().kind(), "NotInCentralizer");
        assert!(is_in_centralizer(&PMatrix::from_i64(&ctx, &[&[1, 2], &[-2, 1]])));
    }

    #[test]
    fn hermitian_form_symmetry() {
        let ctx = PadicContext::new(5, 1, 5).unwrap();
        let q1 = PMatrix::from_i64(&ctx, &[&[1, 2], &[2, 3]]);
        let q2 = PMatrix::from_i64(&ctx, &[&[0, 1], &[-1, 0]]);
        let q = hermitian_form(&q1, &q2).unwrap();
        assert_eq!(q.transpose(), q);
        assert!(check_hermitian_form(&q).is_ok() || !q.is_invertible());
    }
}
