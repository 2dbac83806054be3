//! Chern lifts of the outer involutions: horizontality, uniqueness of the
//! root, matrix Legendre symbols, `SL₂ = Sp₂`, the fixed locus and the
//! Cartan split of the logarithmic derivative.

use delta_jet::{cartan_decompose, tau_involution, DeltaLieElement, Sign, SplitKind, SubgroupSpec};
use frobenius_lifts::verify::{verify_b_symmetric, verify_h_horizontal};
use frobenius_lifts::{chern_lambda, chern_lambda_newton, legendre_matrix, log_derivative, sample as lift_sample, FrobeniusLift};
use padic_core::{PadicScalar, Result};
use padic_linalg::{sample, PMatrix};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{all, expect, mat, Cell, Check, Mode, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check { suite: "outer", name: "chern-h-horizontal", dims: &[2, 3], primes: None, mode: Mode::Random, run: h_horizontal },
        Check { suite: "outer", name: "chern-b-symmetric", dims: &[2, 3], primes: None, mode: Mode::Random, run: b_symmetric },
        Check { suite: "outer", name: "root-series-vs-newton", dims: &[1, 2, 3], primes: None, mode: Mode::Random, run: series_vs_newton },
        Check { suite: "outer", name: "legendre-scalar", dims: &[1], primes: None, mode: Mode::Exhaustive, run: legendre_scalar },
        Check { suite: "outer", name: "legendre-eigen-form", dims: &[2], primes: None, mode: Mode::Exhaustive, run: legendre_eigen_form },
        Check { suite: "outer", name: "sl2-equals-sp2", dims: &[2], primes: None, mode: Mode::Random, run: sl2_equals_sp2 },
        Check { suite: "outer", name: "fixed-locus", dims: &[2, 3, 4], primes: None, mode: Mode::Random, run: fixed_locus },
        Check { suite: "outer", name: "cartan-decomposition", dims: &[2, 3, 4], primes: None, mode: Mode::Random, run: cartan },
        Check { suite: "outer", name: "cartan-log-derivative", dims: &[2, 3, 4], primes: None, mode: Mode::Random, run: cartan_log_derivative },
    ]
}

/// The Chern lift of `q`, or, for the negative control, the same lift
/// shifted by `p·1` (a corrupted `Λ`).
fn chern(cell: &Cell, q: &PMatrix, sign: Sign) -> Result<FrobeniusLift> {
    let lift = FrobeniusLift::chern(q.clone(), sign)?;
    if cell.corrupt_lambda {
        FrobeniusLift::perturbed(PMatrix::identity(&cell.ctx, q.n()), lift)
    } else {
        Ok(lift)
    }
}

/// Random and split forms of size `n`: symmetric always, antisymmetric for
/// even `n`.
fn forms(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Vec<(PMatrix, Sign)>> {
    let n = cell.n;
    let mut out = vec![(lift_sample::form(&cell.ctx, n, Sign::Plus, rng), Sign::Plus)];
    if n % 2 == 0 {
        out.push((lift_sample::form(&cell.ctx, n, Sign::Minus, rng), Sign::Minus));
    }
    for kind in split_kinds(n) {
        out.push((kind.matrix(&cell.ctx, n)?, kind.sign()));
    }
    Ok(out)
}

fn split_kinds(n: usize) -> Vec<SplitKind> {
    if n % 2 == 0 {
        vec![SplitKind::Symplectic, SplitKind::OrthogonalEven]
    } else if n >= 3 {
        vec![SplitKind::OrthogonalOdd]
    } else {
        vec![]
    }
}

type Verifier = fn(&FrobeniusLift, &FrobeniusLift, &PMatrix, Sign, &[PMatrix]) -> Result<frobenius_lifts::verify::VerifyReport>;

fn horizontality(cell: &Cell, rng: &mut ChaCha8Rng, verify: Verifier) -> Result<Outcome> {
    let base = FrobeniusLift::Standard(cell.n);
    let mut parts = Vec::new();
    for (q, sign) in forms(cell, rng)? {
        let lift = chern(cell, &q, sign)?;
        let a = sample::invertible(&cell.ctx, cell.n, rng);
        let report = verify(&lift, &base, &q, sign, std::slice::from_ref(&a))?;
        parts.push(expect(report.passed(), || {
            json!({
                "q": mat(&q),
                "sign": sign.symbol(),
                "point": mat(&a),
                "target_prec": report.target_prec,
                "shortfall": report.max_shortfall(),
            })
        }));
    }
    Ok(all(parts))
}

/// `Φ(a)^t φ(q) Φ(a) = (a^t q a)^{(p)}` at `N − 1`.
fn h_horizontal(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    horizontality(cell, rng, verify_h_horizontal)
}

/// `(a^{(p)})^t φ(q) Φ(a) = Φ(a)^t φ(q) a^{(p)}` at `N − 1`.
fn b_symmetric(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    horizontality(cell, rng, verify_b_symmetric)
}

/// The binomial-series `Λ` equals the Newton root of `Λ² = A⁻¹B` at `N − 1`.
fn series_vs_newton(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for (q, _) in forms(cell, rng)? {
        let x = sample::invertible(&cell.ctx, cell.n, rng);
        let series = chern_lambda(&q, &x)?;
        let newton = chern_lambda_newton(&q, &x)?;
        parts.push(expect(series.is_one_unit() && series.agrees_to(&newton, cell.prec - 1), || {
            json!({"q": mat(&q), "point": mat(&x)})
        }));
    }
    Ok(all(parts))
}

/// `q^{(p−1)/2}·(q/p)` modulo `p^N`, by Euler's criterion in `i128`.
fn euler_value(p: i128, q: i128, prec: u32) -> i128 {
    let m = p.pow(prec);
    let mut pow = 1i128;
    for _ in 0..(p - 1) / 2 {
        pow = pow * q % m;
    }
    let symbol = if pow % p == 1 { 1 } else { -1 };
    (pow * symbol).rem_euclid(m)
}

/// For every unit `q` mod `p`, the `1×1` Legendre value is `q^{(p−1)/2}·(q/p)`
/// and equals the Chern lift at `1`.
fn legendre_scalar(cell: &Cell, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = cell.p() as i64;
    let mut parts = Vec::new();
    for q in 1..p {
        let qm = PMatrix::from_i64(&cell.ctx, &[&[q]]);
        let got = legendre_matrix(&qm, Sign::Plus)?;
        let want = PadicScalar::from_i128(&cell.ctx, euler_value(p as i128, q as i128, cell.prec));
        let at_one = chern(cell, &qm, Sign::Plus)?.evaluate(&PMatrix::identity(&cell.ctx, 1))?;
        parts.push(expect(got.get(0, 0).agrees_to(&want, cell.prec) && at_one == got, || {
            json!({"q": q, "got": mat(&got), "chern_at_one": mat(&at_one)})
        }));
    }
    Ok(all(parts))
}

/// For `q = [[α, β], [β, α]]` with `α ± β` units and `α^pδβ − β^pδα` a unit,
/// the Legendre value is `U·diag(φ₁^{1/2}, φ₂^{1/2})·U⁻¹` with
/// `U = [[1, 1], [−1, 1]]`, `φ₁ = (α^p − β^p)/(α − β)`, `φ₂ = (α^p + β^p)/(α + β)`.
fn legendre_eigen_form(cell: &Cell, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let ctx = &cell.ctx;
    let p = cell.p() as i64;
    let u = PMatrix::from_i64(ctx, &[&[1, 1], &[-1, 1]]);
    let u_inv = u.inverse()?;
    let mut parts = Vec::new();
    for alpha in 1..p {
        for beta in 1..p {
            let (a, b) = (alpha + p, beta);
            if (a - b).rem_euclid(p) == 0 || (a + b).rem_euclid(p) == 0 {
                continue;
            }
            let sa = PadicScalar::from_i64(ctx, a);
            let sb = PadicScalar::from_i64(ctx, b);
            let hyp = &(&sa.pow_p() * &sb.delta()?) - &(&sb.pow_p() * &sa.delta()?);
            if !hyp.is_unit() {
                continue;
            }
            let q = PMatrix::from_i64(ctx, &[&[a, b], &[b, a]]);
            let got = legendre_matrix(&q, Sign::Plus)?;
            let phi1 = &(&sa.pow_p() - &sb.pow_p()) * &(&sa - &sb).inv()?;
            let phi2 = &(&sa.pow_p() + &sb.pow_p()) * &(&sa + &sb).inv()?;
            let d = PMatrix::diag(&[phi1.principal_root(2)?, phi2.principal_root(2)?]);
            let want = &(&u * &d) * &u_inv;
            parts.push(expect(got.agrees_to(&want, cell.prec - 1), || json!({"alpha": a, "beta": b, "got": mat(&got)})));
        }
    }
    Ok(all(parts))
}

/// The special-linear lift and the Chern lift of `[[0, 1], [−1, 0]]` agree at `N − 1`.
fn sl2_equals_sp2(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let sp = chern(cell, &SplitKind::Symplectic.matrix(&cell.ctx, 2)?, Sign::Minus)?;
    let sl = FrobeniusLift::special_linear(&cell.ctx, 2)?;
    let x = sample::invertible(&cell.ctx, 2, rng);
    Ok(expect(sp.evaluate(&x)?.agrees_to(&sl.evaluate(&x)?, cell.prec - 1), || json!({"point": mat(&x)})))
}

/// On `SO(q) ∩ φ₀⁻¹(SO(q))` (normalizer and root-subgroup elements) the
/// Chern lift of a split form is the p-power map, at `N − 1`.
fn fixed_locus(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for kind in split_kinds(cell.n) {
        let q = kind.matrix(&cell.ctx, cell.n)?;
        let spec = SubgroupSpec::split(&cell.ctx, kind, cell.n)?;
        let lift = chern(cell, &q, kind.sign())?;
        let u = lift_sample::fixed_locus_point(&cell.ctx, kind, cell.n, rng)?;
        let on_locus = spec.contains(&u) && spec.contains(&u.p_power());
        parts.push(expect(on_locus && lift.evaluate(&u)?.agrees_to(&u.p_power(), cell.prec - 1), || {
            json!({"kind": format!("{kind:?}"), "point": mat(&u), "on_locus": on_locus})
        }));
    }
    Ok(all(parts))
}

/// `a = a⁺ +_δ a⁻` with `τ(a⁺) = a⁺`, `τ(a⁻) = −_δ a⁻`, `a⁺ ∈ L_δ(SO(q))`,
/// and the decomposition of `a⁺` is `(a⁺, 0)`; all at `N − 1`.
fn cartan(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let k = cell.prec - 1;
    let mut parts = Vec::new();
    for kind in split_kinds(cell.n) {
        let q = kind.matrix(&cell.ctx, cell.n)?;
        let spec = SubgroupSpec::split(&cell.ctx, kind, cell.n)?;
        let a = DeltaLieElement::order_one(sample::matrix(&cell.ctx, cell.n, rng));
        let (plus, minus) = cartan_decompose(&spec, &a)?;
        let round_trip = plus.plus(&minus)?.mat.agrees_to(&a.mat, k);
        let fixed = tau_involution(&q, &plus)?.mat.agrees_to(&plus.mat, k);
        let inverted = tau_involution(&q, &minus)?.mat.agrees_to(&minus.neg()?.mat, k);
        let (p2, m2) = cartan_decompose(&spec, &plus)?;
        let unique = p2.mat.agrees_to(&plus.mat, k) && m2.mat.agrees_to(&PMatrix::zero(&cell.ctx, cell.n), k);
        let member = spec.delta_lie_contains(&plus);
        parts.push(expect(round_trip && fixed && inverted && unique && member, || {
            json!({
                "kind": format!("{kind:?}"), "a": mat(&a.mat),
                "round_trip": round_trip, "tau_fixed": fixed, "tau_inverted": inverted,
                "unique": unique, "plus_in_lie_algebra": member,
            })
        }));
    }
    Ok(all(parts))
}

/// `lδ_Chern(a) = (lδ_0(a))⁺` for `a ∈ SO(q)`, split `q`, at `N − 2`.
fn cartan_log_derivative(cell: &Cell, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut parts = Vec::new();
    for kind in split_kinds(cell.n) {
        let q = kind.matrix(&cell.ctx, cell.n)?;
        let spec = SubgroupSpec::split(&cell.ctx, kind, cell.n)?;
        let a = spec.random_member(&cell.ctx, rng)?;
        let l_chern = log_derivative(&chern(cell, &q, kind.sign())?, &a)?;
        let l_std = log_derivative(&FrobeniusLift::Standard(cell.n), &a)?;
        let (plus, _) = cartan_decompose(&spec, &l_std)?;
        parts.push(expect(l_chern.mat.agrees_to(&plus.mat, cell.prec - 2), || {
            json!({"kind": format!("{kind:?}"), "point": mat(&a)})
        }));
    }
    Ok(all(parts))
}
