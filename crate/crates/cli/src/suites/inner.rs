//! Lifts attached to conjugation: the characteristic-polynomial lift, its
//! isospectral twists, the conjugation lift, and the obstruction witness.

use inner_lifts::{
    charpoly_lift_eval, conjugation_lift_eval, conjugation_lift_from_pair, d_star_star, inner_obstruction_witness,
    isospectral_twist_eval,
};
use padic_core::{newton_root, sample as scalar_sample, PadicScalar, Result};
use padic_linalg::{char_poly, sample, PMatrix};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{expect, mat, Cell, Check, Mode, Outcome};

const DIMS: &[usize] = &[2, 3];

/// Draws before a cell is declared to have no point with `D**` a unit.
const MAX_DRAWS: usize = 200;

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "inner", name: "charpoly-p-horizontal", dims: DIMS, primes: None, mode: Mode::Random, run: charpoly_horizontal },
        Check { suite: "inner", name: "charpoly-regular-diagonal", dims: DIMS, primes: None, mode: Mode::Random, run: regular_diagonal },
        Check { suite: "inner", name: "conjugation-well-defined", dims: DIMS, primes: None, mode: Mode::Random, run: conjugation_well_defined },
        Check { suite: "inner", name: "isospectral-twist", dims: DIMS, primes: None, mode: Mode::Random, run: isospectral_twist },
        Check { suite: "inner", name: "obstruction-witness", dims: &[2], primes: Some(&[3]), mode: Mode::Exhaustive, run: witness },
    ]
}

/// A random invertible matrix with `D**` a unit, or `None` if none was found.
pub(crate) fn charpoly_point(cell: &Cell, rng: &mut ChaCha8Rng) -> Option<PMatrix> {
    (0..MAX_DRAWS).map(|_| sample::matrix(&cell.ctx, cell.n, rng)).find(|a| a.is_invertible() && d_star_star(a).is_unit())
}

/// Indices `i` with `P_i(b) ≠ P_i(a)^p` at precision `k`.
pub(crate) fn charpoly_defects(b: &PMatrix, a: &PMatrix, k: u32) -> Vec<usize> {
    let got = char_poly(b).p;
    let want = char_poly(a).p;
    (1..got.len()).filter(|&i| !got[i].agrees_to(&want[i].pow_p(), k)).collect()
}

/// `P_i(Φ**(a)) = P_i(a)^p` for all `i`, at `N − 1`.
fn charpoly_horizontal(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Some(a) = charpoly_point(cell, rng) else { return Ok(Outcome::Inapplicable) };
    let lift = charpoly_lift_eval(&a, cell.prec - 1)?;
    let bad = charpoly_defects(&lift.phi, &a, cell.prec - 1);
    let shape = lift.lambda.is_diagonal() && lift.lambda.is_one_unit();
    Ok(expect(bad.is_empty() && shape, || json!({"point": mat(&a), "failing_P_i": bad, "lambda_shape_ok": shape})))
}

/// On a regular diagonal `t`, `Φ**(t)` is diagonal and its entries are the
/// roots of `Σ(−1)^i P_i(t)^p s^{n−i}` lifting the `t_i^p`; at `N − 1`.
fn regular_diagonal(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Some(t) = sample::regular_diagonal(&cell.ctx, cell.n, rng) else { return Ok(Outcome::Inapplicable) };
    let phi = charpoly_lift_eval(&t, cell.prec - 1)?.phi;
    let target: Vec<PadicScalar> = char_poly(&t).monic_coeffs().iter().rev().map(|c| c.pow_p()).collect();
    let mut ok = phi.is_diagonal();
    for (i, ti) in t.diagonal().iter().enumerate() {
        let root = newton_root(&target, &ti.pow_p().with_prec(1))?;
        ok &= phi.get(i, i).agrees_to(&root, cell.prec - 1);
    }
    Ok(expect(ok, || json!({"t": mat(&t), "phi": mat(&phi)})))
}

/// `Φ*(x⁻¹tx) = (x^{(p)})⁻¹t^{(p)}x^{(p)}`, independently of the chosen
/// eigendecomposition: permuting the eigenvalues or rescaling the
/// eigenvectors gives the same value at `N − 1`.
fn conjugation_well_defined(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Some((m, t, x)) = sample::regular_conjugate(&cell.ctx, cell.n, rng) else { return Ok(Outcome::Inapplicable) };
    let k = cell.prec - 1;
    let phi = conjugation_lift_eval(&m)?;
    let xp = x.p_power();
    let horizontal = phi.agrees_to(&(&(&xp.inverse()? * &t.p_power()) * &xp), k);
    let w = sample::permutation(&cell.ctx, cell.n, rng);
    let wt = &(&w * &t) * &w.inverse()?;
    let permuted = conjugation_lift_from_pair(&wt, &(&w * &x))?.agrees_to(&phi, k);
    let d: Vec<PadicScalar> = (0..cell.n).map(|_| scalar_sample::unit(&cell.ctx, rng)).collect();
    let rescaled = conjugation_lift_from_pair(&t, &(&PMatrix::diag(&d) * &x))?.agrees_to(&phi, k);
    Ok(expect(horizontal && permuted && rescaled, || {
        json!({"t": mat(&t), "x": mat(&x), "permutation": mat(&w),
               "horizontal": horizontal, "permuted": permuted, "rescaled": rescaled})
    }))
}

/// `ε·Φ**(a)·ε⁻¹` with `ε = 1 + pα` still sends `P_i` to `P_i^p`, at `N − 1`.
fn isospectral_twist(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Some(a) = charpoly_point(cell, rng) else { return Ok(Outcome::Inapplicable) };
    let alpha = sample::matrix(&cell.ctx, cell.n, rng);
    let twisted = isospectral_twist_eval(&a, &alpha, cell.prec - 1)?;
    let bad = charpoly_defects(&twisted, &a, cell.prec - 1);
    Ok(expect(bad.is_empty(), || json!({"point": mat(&a), "alpha": mat(&alpha), "failing_P_i": bad})))
}

/// At `p = 3` and `(a, b, c, d) = (1, 1, 1, 2)` the defect is `216 = 2³·3³`,
/// of valuation exactly 3.
fn witness(cell: &Cell, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    if cell.prec < 4 {
        return Ok(Outcome::Inapplicable);
    }
    let s = |v| PadicScalar::from_i64(&cell.ctx, v);
    let (a, b, c, d) = (s(1), s(1), s(1), s(2));
    let r = inner_obstruction_witness(&cell.ctx, [&a, &b, &c, &d])?;
    let ok = r.valuation == Some(3) && r.defect.agrees_to(&s(216), cell.prec);
    Ok(expect(ok, || json!({"valuation": r.valuation})))
}
