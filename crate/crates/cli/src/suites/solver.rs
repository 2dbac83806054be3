//! δ-linear equations: solutions satisfy all three forms of the equation,
//! and the expected prime integrals are constant along them.
//!
//! Each sample is one (lift, α, seed) triple; the solution is computed at
//! `N − 1` and every identity is checked at `N − 2`.

use delta_jet::{DeltaLieElement, Sign, SubgroupSpec};
use delta_solver::{audit_prime_integrals, solve, DeltaLinearProblem};
use frobenius_lifts::{sample as lift_sample, FrobeniusLift};
use padic_core::Result;
use padic_linalg::{sample, PMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::inner::charpoly_point;
use super::{expect, mat, Cell, Check, Mode, Outcome};

const DIMS: &[usize] = &[2, 3];

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "solver", name: "solve-standard", dims: DIMS, primes: None, mode: Mode::Random, run: standard },
        Check { suite: "solver", name: "solve-chern", dims: DIMS, primes: None, mode: Mode::Random, run: chern },
        Check { suite: "solver", name: "solve-sl", dims: DIMS, primes: None, mode: Mode::Random, run: special_linear },
        Check { suite: "solver", name: "solve-charpoly", dims: DIMS, primes: None, mode: Mode::Random, run: charpoly },
    ]
}

/// Solves, then checks the equation forms and the problem's own prime
/// integrals (which must not be empty when `expect_integrals`).
fn run(cell: &Cell, problem: DeltaLinearProblem, seed: &PMatrix, expect_integrals: bool) -> Result<Outcome> {
    let u = solve(&problem, seed)?;
    let k = cell.prec - 2;
    let forms = problem.check_forms(&u, k)?;
    let integrals = problem.prime_integrals();
    let audit = audit_prime_integrals(&u, &problem, &integrals)?;
    let ok = forms.all() && audit.all_hold() && (!expect_integrals || !integrals.is_empty());
    Ok(expect(ok, || {
        json!({
            "lift": problem.lift.kind(),
            "alpha": mat(&problem.alpha.mat),
            "seed": mat(&seed.with_prec(1)),
            "forms": forms,
            "prime_integrals": audit,
        })
    }))
}

fn problem(cell: &Cell, lift: FrobeniusLift, alpha: DeltaLieElement) -> Result<DeltaLinearProblem> {
    DeltaLinearProblem::new(lift, alpha, cell.prec - 1)
}

fn standard(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let alpha = DeltaLieElement::order_one(sample::matrix(&cell.ctx, cell.n, rng));
    let seed = sample::invertible(&cell.ctx, cell.n, rng);
    run(cell, problem(cell, FrobeniusLift::Standard(cell.n), alpha)?, &seed, false)
}

/// Chern lift of a random form (antisymmetric half the time for even `n`),
/// twisted inside `L_δ(SO(q))`; `H_q` must be a prime integral.
fn chern(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let sign = if cell.n % 2 == 0 && rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus };
    let q = lift_sample::form(&cell.ctx, cell.n, sign, rng);
    let alpha = SubgroupSpec::orthogonal(q.clone(), sign)?.random_delta_lie(&cell.ctx, 1, rng)?;
    let seed = sample::invertible(&cell.ctx, cell.n, rng);
    run(cell, problem(cell, FrobeniusLift::chern(q, sign)?, alpha)?, &seed, true)
}

/// Special-linear lift twisted inside `L_δ(SL_n)`; `det` must be a prime integral.
fn special_linear(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Ok(lift) = FrobeniusLift::special_linear(&cell.ctx, cell.n) else { return Ok(Outcome::Inapplicable) };
    let alpha = SubgroupSpec::SpecialLinear(cell.n).random_delta_lie(&cell.ctx, 1, rng)?;
    let seed = sample::invertible(&cell.ctx, cell.n, rng);
    run(cell, problem(cell, lift, alpha)?, &seed, true)
}

/// Characteristic-polynomial lift with an arbitrary inner twist; the
/// coefficients `P_i` must be prime integrals.
fn charpoly(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let Some(seed) = charpoly_point(cell, rng) else { return Ok(Outcome::Inapplicable) };
    let alpha = DeltaLieElement::order_one(sample::matrix(&cell.ctx, cell.n, rng));
    run(cell, problem(cell, FrobeniusLift::CharPoly(cell.n), alpha)?, &seed, true)
}
