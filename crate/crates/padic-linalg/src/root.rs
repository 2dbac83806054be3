use padic_core::{binomial_root_terms, Error, PadicScalar, Result};

use crate::matrix::PMatrix;

/// The principal `ν`-th root of a matrix `U ≡ 1 (mod p)`: the unique
/// `X ≡ 1 (mod p)` with `X^ν = U`, computed by the binomial series
/// `Σ binom(1/ν, m) p^m V^m` where `U = 1 + pV`.  The result is a
/// polynomial in `U`, so it commutes with `U`; no precision is lost.
pub fn principal_root_matrix(u: &PMatrix, nu: i64) -> Result<PMatrix> {
    let ctx = u.ctx();
    if nu == 0 || nu.unsigned_abs() % ctx.p() == 0 {
        return Err(Error::NuDivisibleByP { nu });
    }
    if !u.is_one_unit() {
        return Err(Error::NotOneUnitMatrix);
    }
    let n = u.n();
    let prec = u.prec();
    let one = PMatrix::identity(ctx, n).with_prec(prec);
    if prec < 2 {
        return Ok(one);
    }
    let v = (u - &one).div_p_exact(1)?;
    let mut acc = one;
    let mut vm = PMatrix::identity(ctx, n).with_prec(v.prec());
    let mut m = 0u32;
    for term in binomial_root_terms(ctx, nu, prec)? {
        while m < term.m {
            vm = &vm * &v;
            m += 1;
        }
        acc = &acc + &vm.scale(&term.coeff).mul_p_pow(term.shift);
    }
    Ok(acc)
}

/// Independent construction of the principal root by the Newton iteration
/// `X ← ((ν − 1)X + U·X^{1−ν}) / ν` started at `X = 1`.  Every iterate is a
/// polynomial in `U`, so the iteration is the scalar one in disguise and
/// converges quadratically.  Negative `ν` inverts the root of `|ν|`.
pub fn root_by_newton(u: &PMatrix, nu: i64) -> Result<PMatrix> {
    let ctx = u.ctx();
    if nu == 0 || nu.unsigned_abs() % ctx.p() == 0 {
        return Err(Error::NuDivisibleByP { nu });
    }
    if !u.is_one_unit() {
        return Err(Error::NotOneUnitMatrix);
    }
    if nu < 0 {
        return root_by_newton(u, -nu)?.inverse();
    }
    let k = nu as u64;
    let n = u.n();
    let inv_nu = PadicScalar::from_i64(ctx, nu).inv()?;
    let nu_minus_one = PadicScalar::from_i64(ctx, nu - 1);
    let mut x = PMatrix::identity(ctx, n).with_prec(u.prec());
    for _ in 0..(2 * ctx.precision() + 2) {
        let x_inv_pow = x.inverse()?.pow(k - 1);
        let next = (&x.scale(&nu_minus_one) + &(u * &x_inv_pow)).scale(&inv_nu);
        if next == x {
            break;
        }
        x = next;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn root_of_identity() {
        let ctx = PadicContext::new(5, 2, 6).unwrap();
        for nu in [1, -1, 2, 3, -4] {
            let r = principal_root_matrix(&PMatrix::identity(&ctx, 3), nu).unwrap();
            assert_eq!(r, PMatrix::identity(&ctx, 3));
        }
    }

    #[test]
    fn nilpotent_square_root() {
        // U = 1 + p·e12 has V² = 0, so the root is 1 + (p/2)·e12.
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let u = PMatrix::from_i64(&ctx, &[&[1, 5], &[0, 1]]);
        let r = principal_root_matrix(&u, 2).unwrap();
        let half_p = &PadicScalar::from_i64(&ctx, 5) * &PadicScalar::from_i64(&ctx, 2).inv().unwrap();
        let expected = PMatrix::new(
            &ctx,
            2,
            vec![PadicScalar::one(&ctx), half_p, PadicScalar::zero(&ctx), PadicScalar::one(&ctx)],
        )
        .unwrap();
        assert_eq!(r, expected);
        assert_eq!(&r * &r, u);
    }

    #[test]
    fn rejects_non_one_unit() {
        let ctx = PadicContext::new(3, 1, 5).unwrap();
        let u = PMatrix::from_i64(&ctx, &[&[2, 0], &[0, 1]]);
        assert_eq!(principal_root_matrix(&u, 2).unwrap_err().kind(), "NotOneUnitMatrix");
        assert_eq!(principal_root_matrix(&PMatrix::identity(&ctx, 2), 3).unwrap_err().kind(), "NuDivisibleByP");
    }
}
