//! Property tests for the δ-linear solver: the three forms of the equation,
//! prime integrals, seed enumeration against brute force, and a fixed-point
//! oracle in rank one.

use delta_jet::{DeltaLieElement, Sign, SplitKind, SubgroupSpec};
use delta_solver::{audit_prime_integrals, enumerate_residue_seeds, solve, DeltaLinearProblem, SolutionSet};
use frobenius_lifts::verify::PrimeIntegral;
use frobenius_lifts::{sample as lift_sample, FrobeniusLift};
use padic_core::{Ctx, PadicContext, PadicScalar};
use padic_linalg::{sample, PMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: u32 = 8;

fn context(p_idx: usize, f: usize) -> Ctx {
    let p = [3u64, 5, 7][p_idx];
    PadicContext::new(p, f, N).unwrap()
}

/// Solves at `N − 1` and checks every form of the equation at `N − 2`.
fn solve_and_check(problem: &DeltaLinearProblem, seed: &PMatrix) -> PMatrix {
    let u = solve(problem, seed).unwrap();
    assert!(u.with_prec(1) == seed.with_prec(1));
    let forms = problem.check_forms(&u, N - 2).unwrap();
    assert!(forms.all(), "{forms:?}");
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn chern_solutions_satisfy_all_forms_and_keep_h_q(pi in 0usize..3, f in 1usize..=2, seed in any::<u64>()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (q, sign) in [
            (lift_sample::form(&ctx, 2, Sign::Plus, &mut rng), Sign::Plus),
            (lift_sample::form(&ctx, 2, Sign::Minus, &mut rng), Sign::Minus),
            (SplitKind::OrthogonalOdd.matrix(&ctx, 3).unwrap(), Sign::Plus),
        ] {
            let n = q.n();
            let alpha = SubgroupSpec::orthogonal(q.clone(), sign).unwrap().random_delta_lie(&ctx, 1, &mut rng).unwrap();
            let lift = FrobeniusLift::chern(q.clone(), sign).unwrap();
            let problem = DeltaLinearProblem::new(lift, alpha, N - 1).unwrap();
            let integrals = problem.prime_integrals();
            prop_assert!(integrals.contains(&PrimeIntegral::Hq(q.clone())));
            let u = solve_and_check(&problem, &sample::invertible(&ctx, n, &mut rng));
            let report = audit_prime_integrals(&u, &problem, &integrals).unwrap();
            prop_assert!(report.all_hold(), "{report:?}");
        }
    }

    #[test]
    fn gl_twist_of_chern_loses_h_q(pi in 0usize..3, seed in any::<u64>()) {
        // A twist outside L_δ(SO(q)) is not expected to keep H_q; check it
        // indeed fails for a generic α and that no integral is claimed.
        let ctx = context(pi, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = lift_sample::form(&ctx, 2, Sign::Plus, &mut rng);
        let mut alpha = DeltaLieElement::order_one(sample::matrix(&ctx, 2, &mut rng));
        alpha.mat.set(0, 0, PadicScalar::one(&ctx)); // keep α off the Lie algebra mod p
        alpha.mat.set(1, 1, PadicScalar::zero(&ctx));
        let problem = DeltaLinearProblem::new(FrobeniusLift::chern(q.clone(), Sign::Plus).unwrap(), alpha, N - 1).unwrap();
        prop_assert!(problem.prime_integrals().is_empty());
        let u = solve_and_check(&problem, &sample::invertible(&ctx, 2, &mut rng));
        let report = audit_prime_integrals(&u, &problem, &[PrimeIntegral::Hq(q)]).unwrap();
        prop_assert!(!report.all_hold());
    }

    #[test]
    fn split_forms_also_keep_normalized_h_q(pi in 0usize..3, f in 1usize..=2, seed in any::<u64>()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (kind, n) in [(SplitKind::Symplectic, 2), (SplitKind::OrthogonalEven, 2)] {
            let spec = SubgroupSpec::split(&ctx, kind, n).unwrap();
            let q = kind.matrix(&ctx, n).unwrap();
            let alpha = spec.random_delta_lie(&ctx, 1, &mut rng).unwrap();
            let problem = DeltaLinearProblem::new(FrobeniusLift::chern(q.clone(), kind.sign()).unwrap(), alpha, N - 1).unwrap();
            let integrals = problem.prime_integrals();
            prop_assert!(integrals.contains(&PrimeIntegral::HqNormalized(q)));
            let u = solve_and_check(&problem, &sample::invertible(&ctx, n, &mut rng));
            prop_assert!(audit_prime_integrals(&u, &problem, &integrals).unwrap().all_hold());
        }
    }

    #[test]
    fn special_linear_solutions_keep_det(pi in 0usize..3, f in 1usize..=2, seed in any::<u64>()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2;
        let alpha = SubgroupSpec::SpecialLinear(n).random_delta_lie(&ctx, 1, &mut rng).unwrap();
        let problem = DeltaLinearProblem::new(FrobeniusLift::special_linear(&ctx, n).unwrap(), alpha, N - 1).unwrap();
        prop_assert_eq!(problem.prime_integrals(), vec![PrimeIntegral::Det]);
        let u = solve_and_check(&problem, &sample::invertible(&ctx, n, &mut rng));
        prop_assert!(audit_prime_integrals(&u, &problem, &[PrimeIntegral::Det]).unwrap().all_hold());
    }

    #[test]
    fn charpoly_solutions_keep_charpoly(pi in 0usize..3, seed in any::<u64>()) {
        let ctx = context(pi, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut solved = 0;
        for _ in 0..12 {
            let alpha = DeltaLieElement::order_one(sample::matrix(&ctx, 2, &mut rng));
            let problem = DeltaLinearProblem::new(FrobeniusLift::CharPoly(2), alpha, N - 1).unwrap();
            let s = sample::invertible(&ctx, 2, &mut rng);
            // Seeds outside the lift's domain are rejected, not mis-solved.
            let Ok(u) = solve(&problem, &s) else { continue };
            solved += 1;
            prop_assert!(problem.check_forms(&u, N - 2).unwrap().all());
            prop_assert!(audit_prime_integrals(&u, &problem, &problem.prime_integrals()).unwrap().all_hold());
        }
        prop_assert!(solved > 0);
    }

    #[test]
    fn conjugation_solutions_satisfy_all_forms(pi in 1usize..3, seed in any::<u64>()) {
        let ctx = context(pi, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, _, _) = sample::regular_conjugate(&ctx, 2, &mut rng).unwrap();
        let alpha = DeltaLieElement::order_one(sample::matrix(&ctx, 2, &mut rng));
        let problem = DeltaLinearProblem::new(FrobeniusLift::Conjugation(2), alpha, N - 1).unwrap();
        prop_assert!(problem.prime_integrals().is_empty());
        solve_and_check(&problem, &m);
    }

    #[test]
    fn solving_is_deterministic(pi in 0usize..3, f in 1usize..=2, seed in any::<u64>()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = lift_sample::form(&ctx, 3, Sign::Plus, &mut rng);
        let alpha = DeltaLieElement::order_one(sample::matrix(&ctx, 3, &mut rng));
        let problem = DeltaLinearProblem::new(FrobeniusLift::chern(q, Sign::Plus).unwrap(), alpha, N - 1).unwrap();
        let s = sample::invertible(&ctx, 3, &mut rng);
        prop_assert_eq!(solve(&problem, &s).unwrap(), solve(&problem, &s).unwrap());
    }

    #[test]
    fn rank_one_matches_fixed_point_iteration(pi in 0usize..3, q0 in 1i64..50, seed in any::<u64>()) {
        // Over Z_p (f = 1) the equation reads u = εΦ(u), and u ↦ εΦ(u) is a
        // contraction fixing residues, so iterating from the seed converges.
        let ctx = context(pi, 1);
        let p = ctx.p() as i64;
        let q0 = if q0 % p == 0 { q0 + 1 } else { q0 };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = PMatrix::from_i64(&ctx, &[&[q0]]);
        let alpha = DeltaLieElement::order_one(sample::matrix(&ctx, 1, &mut rng));
        let lift = FrobeniusLift::chern(q, Sign::Plus).unwrap();
        let eps = alpha.unit();
        let problem = DeltaLinearProblem::new(lift.clone(), alpha, N - 1).unwrap();
        let s = sample::invertible(&ctx, 1, &mut rng);
        let mut x = s.clone();
        for _ in 0..N {
            x = &eps * &lift.evaluate(&x).unwrap();
        }
        prop_assert!(solve(&problem, &s).unwrap().agrees_to(&x, N - 1));
    }
}

#[test]
fn gl2_f3_every_invertible_residue_is_a_seed() {
    // Oracle: count invertible 2×2 matrices over F_3 by brute force.
    let expected: Vec<[u64; 4]> = (0..81u64)
        .map(|i| [i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3])
        .filter(|m| (m[0] * m[3] + 2 * m[1] * m[2]) % 3 != 0)
        .collect();
    assert_eq!(expected.len(), 48);
    let ctx = PadicContext::new(3, 1, 6).unwrap();
    let q = PMatrix::from_i64(&ctx, &[&[1, 1], &[1, 2]]);
    let one = PMatrix::identity(&ctx, 2);
    for lift in [FrobeniusLift::Standard(2), FrobeniusLift::chern(q, Sign::Plus).unwrap()] {
        let problem = DeltaLinearProblem::new(lift, DeltaLieElement::zero(&one, 1), 4).unwrap();
        let seeds = enumerate_residue_seeds(&problem).unwrap();
        let got: Vec<[u64; 4]> = seeds
            .iter()
            .map(|s| {
                let e = |i, j| s.get(i, j).coeffs()[0];
                [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
            })
            .collect();
        assert_eq!(got, expected);
        let set = SolutionSet::from_seeds(&problem, &seeds);
        assert_eq!(set.solutions.len(), 48);
    }
}

#[test]
fn standard_lift_untwisted_fixes_identity() {
    let ctx = PadicContext::new(7, 2, N).unwrap();
    let one = PMatrix::identity(&ctx, 3);
    let problem = DeltaLinearProblem::new(FrobeniusLift::Standard(3), DeltaLieElement::zero(&one, 1), N - 1).unwrap();
    assert_eq!(solve(&problem, &one).unwrap(), one.with_prec(N - 1));
}

#[test]
fn single_entry_is_not_a_prime_integral() {
    // Negative control for the audit: δ(u₁₁) ≠ 0 on a twisted Chern solution.
    let ctx = PadicContext::new(5, 1, N).unwrap();
    let q = PMatrix::from_i64(&ctx, &[&[2, 1], &[1, 2]]);
    let alpha = DeltaLieElement::order_one(PMatrix::from_i64(&ctx, &[&[1, 2], &[3, 4]]));
    let problem = DeltaLinearProblem::new(FrobeniusLift::chern(q, Sign::Plus).unwrap(), alpha, N - 1).unwrap();
    let u = solve(&problem, &PMatrix::from_i64(&ctx, &[&[1, 2], &[0, 1]])).unwrap();
    assert!(!u.get(0, 0).delta().unwrap().is_zero());
}

#[test]
fn problem_validation() {
    let ctx = PadicContext::new(5, 1, 6).unwrap();
    let one = PMatrix::identity(&ctx, 2);
    let lift = FrobeniusLift::Standard(2);
    let kind = |r: padic_core::Result<DeltaLinearProblem>| r.unwrap_err().kind();
    assert_eq!(kind(DeltaLinearProblem::new(lift.clone(), DeltaLieElement::zero(&one, 2), 4)), "OrderMismatch");
    assert_eq!(
        kind(DeltaLinearProblem::new(lift.clone(), DeltaLieElement::zero(&PMatrix::identity(&ctx, 3), 1), 4)),
        "DimensionMismatch"
    );
    assert_eq!(kind(DeltaLinearProblem::new(lift.clone(), DeltaLieElement::zero(&one, 1), 7)), "InsufficientPrecision");
    assert_eq!(kind(DeltaLinearProblem::new(lift, DeltaLieElement::zero(&one, 1), 1)), "InsufficientPrecision");
    assert_eq!(DeltaLinearProblem::default_prec(&ctx), 4);
}

#[test]
fn problem_json_round_trip() {
    let ctx = PadicContext::new(5, 1, 8).unwrap();
    let text = r#"{
        "lift": {"kind": "chern", "q": {"n": 2, "entries": [[2, 1], [1, 2]]}},
        "alpha": {"n": 2, "entries": [[1, 0], [0, 4]]},
        "seed": {"n": 2, "entries": [[1, 2], [3, 4]]},
        "prec": 6
    }"#;
    let pj: delta_solver::ProblemJson = serde_json::from_str(text).unwrap();
    let (problem, seed) = pj.to_problem(&ctx).unwrap();
    assert_eq!(problem.prec, 6);
    assert_eq!(problem.lift.kind(), "chern");
    let u = solve(&problem, &seed).unwrap();
    assert!(problem.check_forms(&u, 5).unwrap().all());
    let back: delta_solver::ProblemJson = serde_json::from_str(&serde_json::to_string(&pj).unwrap()).unwrap();
    assert_eq!(back, pj);
}
