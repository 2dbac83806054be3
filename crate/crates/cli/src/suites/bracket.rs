//! The δ-bracket: its reduction mod p, the Lie axioms mod p, and the exact
//! relation with group commutators through `ex`.

use delta_jet::DeltaLieElement;
use padic_core::Result;
use padic_linalg::{sample, PMatrix};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{all, expect, mat, Cell, Check, Mode, Outcome};

const DIMS: &[usize] = &[1, 2, 3];

/// Order pairs `(r, s)` with `r + s ≤ 4`.
const PAIRS: [(u32, u32); 6] = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)];

/// Order triples with total at most 4, for the Jacobi identity.
const TRIPLES: [(u32, u32, u32); 4] = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)];

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "bracket", name: "bracket-mod-p-formula", dims: DIMS, primes: None, mode: Mode::Random, run: mod_p_formula },
        Check { suite: "bracket", name: "bracket-antisymmetry", dims: DIMS, primes: None, mode: Mode::Random, run: antisymmetry },
        Check { suite: "bracket", name: "bracket-jacobi", dims: DIMS, primes: None, mode: Mode::Random, run: jacobi },
        Check { suite: "bracket", name: "bracket-linearity", dims: DIMS, primes: None, mode: Mode::Random, run: linearity },
        Check { suite: "bracket", name: "bracket-ex-commutator", dims: DIMS, primes: None, mode: Mode::Random, run: ex_commutator },
    ]
}

fn lie(cell: &Cell, order: u32, rng: &mut ChaCha8Rng) -> Result<DeltaLieElement> {
    DeltaLieElement::new(sample::matrix(&cell.ctx, cell.n, rng), order)
}

fn mod_p_zero(m: &PMatrix) -> bool {
    m.agrees_to(&PMatrix::zero(m.ctx(), m.n()), 1)
}

/// `[α, β]_δ ≡ [α^{(p^s)}, β^{(p^r)}] (mod p)` for `α` of order `r`, `β` of order `s`.
fn mod_p_formula(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (r, s) in PAIRS {
        let alpha = lie(cell, r, rng)?;
        let beta = lie(cell, s, rng)?;
        let br = alpha.bracket(&beta)?;
        let (x, y) = (alpha.mat.p_power_iter(s), beta.mat.p_power_iter(r));
        let expected = &(&x * &y) - &(&y * &x);
        parts.push(expect(br.order == r + s && br.mat.agrees_to(&expected, 1), || {
            json!({"r": r, "s": s, "alpha": mat(&alpha.mat), "beta": mat(&beta.mat)})
        }));
    }
    Ok(all(parts))
}

/// `[α, β]_δ +_δ [β, α]_δ ≡ 0 (mod p)`.
fn antisymmetry(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (r, s) in PAIRS {
        let alpha = lie(cell, r, rng)?;
        let beta = lie(cell, s, rng)?;
        let sum = alpha.bracket(&beta)?.plus(&beta.bracket(&alpha)?)?;
        parts.push(expect(mod_p_zero(&sum.mat), || {
            json!({"r": r, "s": s, "alpha": mat(&alpha.mat), "beta": mat(&beta.mat)})
        }));
    }
    Ok(all(parts))
}

/// `[[α,β],γ] +_δ [[β,γ],α] +_δ [[γ,α],β] ≡ 0 (mod p)`.
fn jacobi(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (r, s, t) in TRIPLES {
        let a = lie(cell, r, rng)?;
        let b = lie(cell, s, rng)?;
        let c = lie(cell, t, rng)?;
        let j1 = a.bracket(&b)?.bracket(&c)?;
        let j2 = b.bracket(&c)?.bracket(&a)?;
        let j3 = c.bracket(&a)?.bracket(&b)?;
        let sum = j1.plus(&j2)?.plus(&j3)?;
        parts.push(expect(mod_p_zero(&sum.mat), || {
            json!({"orders": [r, s, t], "alpha": mat(&a.mat), "beta": mat(&b.mat), "gamma": mat(&c.mat)})
        }));
    }
    Ok(all(parts))
}

/// `[α₁ +_δ α₂, β]_δ ≡ [α₁, β]_δ +_δ [α₂, β]_δ (mod p)`, in both slots.
fn linearity(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (r, s) in PAIRS {
        let a1 = lie(cell, r, rng)?;
        let a2 = lie(cell, r, rng)?;
        let b = lie(cell, s, rng)?;
        let left = a1.plus(&a2)?.bracket(&b)?;
        let left_sum = a1.bracket(&b)?.plus(&a2.bracket(&b)?)?;
        let right = b.bracket(&a1.plus(&a2)?)?;
        let right_sum = b.bracket(&a1)?.plus(&b.bracket(&a2)?)?;
        parts.push(expect(left.mat.agrees_to(&left_sum.mat, 1) && right.mat.agrees_to(&right_sum.mat, 1), || {
            json!({"r": r, "s": s, "alpha1": mat(&a1.mat), "alpha2": mat(&a2.mat), "beta": mat(&b.mat)})
        }));
    }
    Ok(all(parts))
}

/// `ex^{r+s}([α, β]_δ) = ex^r(α)·ex^s(β)·ex^r(α)⁻¹·ex^s(β)⁻¹` at precision `N − (r + s)`.
fn ex_commutator(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (r, s) in PAIRS {
        let alpha = lie(cell, r, rng)?;
        let beta = lie(cell, s, rng)?;
        let (x, y) = (alpha.ex(), beta.ex());
        let comm = &(&(&x * &y) * &x.inverse()?) * &y.inverse()?;
        let lhs = alpha.bracket(&beta)?.ex();
        parts.push(expect(lhs.agrees_to(&comm, cell.prec - (r + s)), || {
            json!({"r": r, "s": s, "alpha": mat(&alpha.mat), "beta": mat(&beta.mat)})
        }));
    }
    Ok(all(parts))
}
