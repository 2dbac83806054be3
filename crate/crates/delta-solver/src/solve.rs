use padic_core::{Error, PadicScalar, Result};
use padic_linalg::PMatrix;

use crate::problem::DeltaLinearProblem;

/// Solutions of one problem together with the residue seed of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<PMatrix>,
    pub seeds: Vec<PMatrix>,
}

/// The unique solution of `φ(u) = Φ^α(u)` at precision `problem.prec`
/// reducing to `seed` mod `p`.
///
/// With `u` known mod `p^k`, append a zero digit and compute the defect
/// `D = Φ^α(u) − φ(u)`, which vanishes mod `p^k`.  The next digit `h` must
/// satisfy `φ(h) ≡ D/p^k (mod p)`, because `Φ^α` does not see the new digit
/// mod `p^{k+1}`; so `h = φ^{−1}(D/p^k)` on the residue field.
pub fn solve(problem: &DeltaLinearProblem, seed: &PMatrix) -> Result<PMatrix> {
    let seed = seed.with_prec(1);
    if seed.n() != problem.n() {
        return Err(Error::DimensionMismatch(format!("seed is {0}x{0}, expected {1}x{1}", seed.n(), problem.n())));
    }
    if !seed.is_invertible() {
        return Err(Error::SeedNotInvertible);
    }
    let lift = problem.twisted_lift();
    let mut u = seed;
    for k in 1..problem.prec {
        let next = u.lift_to(k + 1);
        let defect = &lift.evaluate(&next)? - &next.frobenius(1);
        let c = defect.div_p_exact(k).map_err(|_| Error::LiftDefect { digit: k })?;
        let h = c.with_prec(1).frobenius(-1);
        u = &next + &h.lift_to(k + 1).mul_p_pow(k);
    }
    let residual = &lift.evaluate(&u)? - &u.frobenius(1);
    if !residual.is_zero() {
        return Err(Error::LiftDefect { digit: problem.prec });
    }
    Ok(u)
}

/// Every invertible residue matrix, for `n ≤ 2`, `p ≤ 5`, `f = 1`, from
/// which the solver lifts two digits; the others are reported as failures
/// by [`solve`].
pub fn enumerate_residue_seeds(problem: &DeltaLinearProblem) -> Result<Vec<PMatrix>> {
    let ctx = problem.ctx();
    let n = problem.n();
    if n > 2 || ctx.p() > 5 || ctx.f() != 1 {
        return Err(Error::TooLarge(format!(
            "seed enumeration is limited to n ≤ 2, p ≤ 5, f = 1 (got n = {n}, p = {}, f = {})",
            ctx.p(),
            ctx.f()
        )));
    }
    let p = ctx.p();
    let cells = n * n;
    let short = DeltaLinearProblem { prec: 2.min(ctx.precision()), ..problem.clone() };
    let mut out = Vec::new();
    for idx in 0..p.pow(cells as u32) {
        let entries: Vec<PadicScalar> = (0..cells)
            .map(|i| PadicScalar::from_residues(ctx, &[(idx / p.pow(i as u32)) % p], 1))
            .collect();
        let m = PMatrix::new(ctx, n, entries)?;
        if m.is_invertible() && solve(&short, &m).is_ok() {
            out.push(m);
        }
    }
    Ok(out)
}

impl SolutionSet {
    /// Solves from each seed; seeds that fail are skipped.
    pub fn from_seeds(problem: &DeltaLinearProblem, seeds: &[PMatrix]) -> Self {
        let mut set = SolutionSet { solutions: Vec::new(), seeds: Vec::new() };
        for s in seeds {
            if let Ok(u) = solve(problem, s) {
                set.solutions.push(u);
                set.seeds.push(s.with_prec(1));
            }
        }
        set
    }
}
