//! The p-derivation axioms on scalars.

use padic_core::{sample, PadicScalar, Result};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{all, expect, Cell, Check, Mode, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "padic", name: "delta-sum-rule", dims: &[1], primes: None, mode: Mode::Random, run: sum_rule },
        Check { suite: "padic", name: "delta-product-rule", dims: &[1], primes: None, mode: Mode::Random, run: product_rule },
        Check { suite: "padic", name: "frobenius-through-delta", dims: &[1], primes: None, mode: Mode::Random, run: frobenius_through_delta },
    ]
}

fn s(x: &PadicScalar) -> serde_json::Value {
    serde_json::to_value(padic_core::json::ScalarJson::from_scalar(x)).expect("scalars serialize")
}

/// `δ(a + b) = δa + δb + (a^p + b^p − (a + b)^p)/p` at `N − 1`.
fn sum_rule(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample::scalar(&cell.ctx, rng);
    let b = sample::scalar(&cell.ctx, rng);
    let carry = (&(&a.pow_p() + &b.pow_p()) - &(&a + &b).pow_p()).div_p_exact(1)?;
    let rhs = &(&a.delta()? + &b.delta()?) + &carry;
    let lhs = (&a + &b).delta()?;
    Ok(expect(lhs.agrees_to(&rhs, cell.prec - 1), || json!({"a": s(&a), "b": s(&b)})))
}

/// `δ(ab) = a^p δb + b^p δa + p δa δb` at `N − 1`.
fn product_rule(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample::scalar(&cell.ctx, rng);
    let b = sample::scalar(&cell.ctx, rng);
    let (da, db) = (a.delta()?, b.delta()?);
    let rhs = &(&(&a.pow_p() * &db) + &(&b.pow_p() * &da)) + &(&da * &db).mul_p_pow(1);
    let lhs = (&a * &b).delta()?;
    Ok(expect(lhs.agrees_to(&rhs, cell.prec - 1), || json!({"a": s(&a), "b": s(&b)})))
}

/// `φ(a) = a^p + pδa` exactly, and `δ` of `0` and `1` vanishes.
fn frobenius_through_delta(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample::scalar(&cell.ctx, rng);
    let rebuilt = &a.pow_p() + &a.delta()?.mul_p_pow(1);
    let zero = PadicScalar::zero(&cell.ctx);
    let one = PadicScalar::one(&cell.ctx);
    Ok(all([
        expect(a.frobenius(1).agrees_to(&rebuilt, cell.prec), || json!({"a": s(&a)})),
        expect(zero.delta()?.is_zero() && one.delta()?.is_zero(), || json!({"constants": "δ(0), δ(1)"})),
    ]))
}
