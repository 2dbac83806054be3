//! Random matrices for property tests and verification suites.

use padic_core::{sample as scalar_sample, Ctx, PadicScalar};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::matrix::PMatrix;

/// Uniformly random entries at full precision.
pub fn matrix<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> PMatrix {
    PMatrix::from_fn(ctx, n, |_, _| scalar_sample::scalar(ctx, rng))
}

/// A random invertible matrix (rejection sampling on the residue).
pub fn invertible<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> PMatrix {
    loop {
        let m = matrix(ctx, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random matrix `≡ 1 (mod p)`.
pub fn one_unit<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> PMatrix {
    &PMatrix::identity(ctx, n) + &matrix(ctx, n, rng).mul_p_pow(1)
}

/// A random permutation matrix.
pub fn permutation<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> PMatrix {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    PMatrix::permutation(ctx, &sigma)
}

/// A random monomial matrix: a permutation times an invertible diagonal.
pub fn monomial<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> PMatrix {
    let d: Vec<PadicScalar> = (0..n).map(|_| scalar_sample::unit(ctx, rng)).collect();
    &permutation(ctx, n, rng) * &PMatrix::diag(&d)
}

/// A random invertible diagonal matrix whose entries are pairwise distinct
/// modulo `p`, or `None` when the residue field has fewer than `n` nonzero
/// elements.
pub fn regular_diagonal<R: Rng + ?Sized>(ctx: &Ctx, n: usize, rng: &mut R) -> Option<PMatrix> {
    let size = ctx.residue_field_size()?;
    if size - 1 < n as u64 {
        return None;
    }
    let mut entries: Vec<PadicScalar> = Vec::with_capacity(n);
    while entries.len() < n {
        let t = scalar_sample::unit(ctx, rng);
        if entries.iter().all(|s| s.residue() != t.residue()) {
            entries.push(t);
        }
    }
    Some(PMatrix::diag(&entries))
}

/// A random regular matrix `x⁻¹ t x` with split characteristic polynomial,
/// returned with its factors `(m, t, x)`.
pub fn regular_conjugate<R: Rng + ?Sized>(
    ctx: &Ctx,
    n: usize,
    rng: &mut R,
) -> Option<(PMatrix, PMatrix, PMatrix)> {
    let t = regular_diagonal(ctx, n, rng)?;
    let x = invertible(ctx, n, rng);
    let m = &x.inverse().expect("sampled invertible") * &(&t * &x);
    Some((m, t, x))
}
