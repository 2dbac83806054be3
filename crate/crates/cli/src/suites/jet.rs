//! The first jet group: ghost map and the multiplicativity of `∇¹`.

use delta_jet::JetPoint;
use padic_core::Result;
use padic_linalg::sample;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{all, expect, mat, Cell, Check, Mode, Outcome};

const DIMS: &[usize] = &[1, 2, 3];

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "jet", name: "ghost-homomorphism", dims: DIMS, primes: None, mode: Mode::Random, run: ghost_homomorphism },
        Check { suite: "jet", name: "nabla-multiplicative", dims: DIMS, primes: None, mode: Mode::Random, run: nabla_multiplicative },
        Check { suite: "jet", name: "ghost-of-nabla", dims: DIMS, primes: None, mode: Mode::Random, run: ghost_of_nabla },
        Check { suite: "jet", name: "jet-identity-inverse", dims: DIMS, primes: None, mode: Mode::Random, run: identity_inverse },
    ]
}

fn random_jet(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<JetPoint> {
    JetPoint::new(sample::invertible(&cell.ctx, cell.n, rng), sample::matrix(&cell.ctx, cell.n, rng))
}

fn dump(x: &JetPoint) -> serde_json::Value {
    json!({"a0": mat(&x.a0), "a1": mat(&x.a1)})
}

/// `w(x ∘ y) = w(x)·w(y)` in both ghost components, exactly.
fn ghost_homomorphism(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = random_jet(cell, rng)?;
    let y = random_jet(cell, rng)?;
    let (x0, x1) = x.ghost();
    let (y0, y1) = y.ghost();
    let (z0, z1) = x.mul(&y)?.ghost();
    Ok(expect(z0 == &x0 * &y0 && z1 == &x1 * &y1, || json!({"x": dump(&x), "y": dump(&y)})))
}

/// `∇¹(ab) = ∇¹a ∘ ∇¹b` at the precision of `δ`.
fn nabla_multiplicative(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample::invertible(&cell.ctx, cell.n, rng);
    let b = sample::invertible(&cell.ctx, cell.n, rng);
    let lhs = JetPoint::nabla(&(&a * &b))?;
    let rhs = JetPoint::nabla(&a)?.mul(&JetPoint::nabla(&b)?)?;
    Ok(expect(lhs.a0 == rhs.a0 && lhs.a1.agrees_to(&rhs.a1, cell.prec - 1), || json!({"a": mat(&a), "b": mat(&b)})))
}

/// `w(∇¹a) = (a, φ(a))`.
fn ghost_of_nabla(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample::invertible(&cell.ctx, cell.n, rng);
    let (g0, g1) = JetPoint::nabla(&a)?.ghost();
    Ok(expect(g0 == a && g1.agrees_to(&a.frobenius(1), cell.prec - 1), || json!({"a": mat(&a)})))
}

/// `(1, 0)` is a two-sided identity and `x ∘ x⁻¹ = x⁻¹ ∘ x = (1, 0)`.
fn identity_inverse(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = random_jet(cell, rng)?;
    let e = JetPoint::identity(&x.a0);
    let k = cell.prec - 1;
    let same = |u: &JetPoint, v: &JetPoint| u.a0 == v.a0 && u.a1.agrees_to(&v.a1, k);
    let xi = x.inv()?;
    Ok(all([
        expect(same(&e.mul(&x)?, &x) && same(&x.mul(&e)?, &x), || json!({"x": dump(&x), "law": "identity"})),
        expect(same(&x.mul(&xi)?, &e) && same(&xi.mul(&x)?, &e), || json!({"x": dump(&x), "law": "inverse"})),
    ]))
}
