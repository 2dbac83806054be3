use padic_core::{Error, PadicScalar, Result};
use padic_linalg::{berkowitz, PMatrix};

/// Coefficients of `G_j(s) = det(s·1_{n,j} − a)`, where `1_{n,j}` is the
/// identity with its `j`-th diagonal entry replaced by `0`, listed by
/// increasing power of `s` (`k = 0, …, n − 1`).
///
/// Expanding along column `j` gives
/// `G_j(s) = det(s − a) − s·det(s − a_{(j)})` with `a_{(j)}` the principal
/// minor obtained by deleting row and column `j`.
fn g_coeffs(a: &PMatrix) -> Vec<Vec<PadicScalar>> {
    let n = a.n();
    let ctx = a.ctx();
    let full = berkowitz(a); // full[k] is the coefficient of s^{n−k}
    (0..n)
        .map(|j| {
            let minor = if n == 1 { vec![PadicScalar::one(ctx)] } else { berkowitz(&a.minor(j, j)) };
            // minor[k] is the coefficient of s^{n−1−k}; times s it sits at s^{n−k}
            (0..n)
                .map(|power| {
                    let k = n - power;
                    match minor.get(k) {
                        Some(m) => &full[k] - m,
                        None => full[k].clone(),
                    }
                })
                .collect()
        })
        .collect()
}

/// The matrix `(P_{ij}(a))` with `det(s·1_{n,j} − a) = Σ_{i=0}^{n−1} (−1)^i P_{ij}(a) s^{n−1−i}`.
pub fn p_ij_matrix(a: &PMatrix) -> PMatrix {
    let n = a.n();
    let g = g_coeffs(a);
    PMatrix::from_fn(a.ctx(), n, |i, j| {
        let c = &g[j][n - 1 - i];
        if i % 2 == 1 {
            -c
        } else {
            c.clone()
        }
    })
}

/// `D**(a) = det(P_{ij}(a))`; the characteristic-polynomial lift is defined
/// exactly where this is a unit.
pub fn d_star_star(a: &PMatrix) -> PadicScalar {
    p_ij_matrix(a).det()
}

/// Result of evaluating the characteristic-polynomial lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyLift {
    /// `Φ**(a) = a^{(p)}Λ`.
    pub phi: PMatrix,
    /// The diagonal correction `Λ ≡ 1 (mod p)`.
    pub lambda: PMatrix,
    /// Precision to which `Φ**(a)` is determined.
    pub prec: u32,
}

/// Runs `stages` correction steps and returns `Λ`.  After `ν` steps,
/// `det(s − a^{(p)}Λ) ≡ det(s − a)^{φ₀} (mod p^{ν+1})`, where the right side
/// has coefficients `c_k(a)^p` (`c_k` the coefficients of `det(s − a)`).
///
/// Each step writes `Λ_{ν+1} = Λ_ν − p^{ν+1}·diag(z)` and solves the linear
/// system `Σ_j z_j [s^k]G_j(a^{(p)}) ≡ U_k (mod p)` for the scaled defect
/// `U = (det(s − a^{(p)}Λ_ν) − target)/p^{ν+1}`.  Its determinant is
/// `±D**(a)^p` modulo `p`.
pub fn charpoly_lift_stages(a: &PMatrix, stages: u32) -> Result<PMatrix> {
    let n = a.n();
    let ctx = a.ctx();
    if !d_star_star(a).is_unit() {
        return Err(Error::DStarStarNotUnit);
    }
    let ap = a.p_power();
    if stages + 1 > ap.prec() {
        return Err(Error::InsufficientPrecision { needed: stages + 1, available: ap.prec() });
    }
    let target: Vec<PadicScalar> = berkowitz(a).iter().map(|c| c.pow_p()).collect();
    let g = g_coeffs(&ap);
    let system = PMatrix::from_fn(ctx, n, |k, j| g[j][k].with_prec(1));
    let solve = system.inverse()?;
    let mut lambda = vec![PadicScalar::one(ctx); n];
    for nu in 0..stages {
        let current = berkowitz(&(&ap * &PMatrix::diag(&lambda)));
        // U_k is the coefficient of s^k, k = 0..n−1; current[n − k] holds s^k
        let u: Vec<PadicScalar> = (0..n)
            .map(|k| {
                let diff = (&current[n - k] - &target[n - k]).with_prec(nu + 2);
                diff.div_p_exact(nu + 1).map(|v| v.with_prec(1))
            })
            .collect::<Result<_>>()?;
        for (j, lam) in lambda.iter_mut().enumerate() {
            let mut z = PadicScalar::zero(ctx);
            for (k, uk) in u.iter().enumerate() {
                z = &z + &(solve.get(j, k) * uk);
            }
            let z = z.lift_to(ctx.precision());
            *lam = &*lam - &z.mul_p_pow(nu + 1);
        }
    }
    Ok(PMatrix::diag(&lambda))
}

/// Evaluates `Φ**(a)` to precision `target_prec`, which may not exceed the
/// precision of `a^{(p)}`.
pub fn charpoly_lift_eval(a: &PMatrix, target_prec: u32) -> Result<CharPolyLift> {
    if target_prec == 0 {
        return Err(Error::InsufficientPrecision { needed: 1, available: 0 });
    }
    let lambda = charpoly_lift_stages(a, target_prec - 1)?.with_prec(target_prec);
    let phi = (&a.p_power() * &lambda).with_prec(target_prec);
    Ok(CharPolyLift { phi, lambda, prec: target_prec })
}

/// The isospectral twist `ε·Φ**(a)·ε⁻¹` with `ε = 1 + p·alpha`.
pub fn isospectral_twist_eval(a: &PMatrix, alpha: &PMatrix, target_prec: u32) -> Result<PMatrix> {
    a.check_compatible(alpha)?;
    let phi = charpoly_lift_eval(a, target_prec)?.phi;
    let eps = &PMatrix::identity(a.ctx(), a.n()) + &alpha.mul_p_pow(1);
    Ok((&(&eps * &phi) * &eps.inverse()?).with_prec(target_prec))
}
