//! Property tests for the scalar ring: p-derivation axioms, Frobenius as a
//! ring automorphism, and uniqueness of principal roots.

use padic_core::{newton_root, sample, Ctx, PadicContext, PadicScalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: u32 = 10;

fn context(p_idx: usize, f: usize) -> Ctx {
    let p = [3u64, 5, 7][p_idx];
    PadicContext::new(p, f, N).unwrap()
}

fn params() -> impl Strategy<Value = (usize, usize, u64)> {
    (0usize..3, 1usize..=2, any::<u64>())
}

/// `C_p(x, y) = (x^p + y^p − (x + y)^p)/p`.
fn carry(x: &PadicScalar, y: &PadicScalar) -> PadicScalar {
    (&(&x.pow_p() + &y.pow_p()) - &(x + y).pow_p()).div_p_exact(1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_is_a_p_derivation((pi, f, seed) in params()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::scalar(&ctx, &mut rng);
        let b = sample::scalar(&ctx, &mut rng);
        let (da, db) = (a.delta().unwrap(), b.delta().unwrap());
        let sum_rule = &(&da + &db) + &carry(&a, &b);
        prop_assert!((&a + &b).delta().unwrap().agrees_to(&sum_rule, N - 1));
        let p = PadicScalar::from_i64(&ctx, ctx.p() as i64);
        let prod_rule = &(&(&a.pow_p() * &db) + &(&b.pow_p() * &da)) + &(&p * &(&da * &db));
        prop_assert!((&a * &b).delta().unwrap().agrees_to(&prod_rule, N - 1));
    }

    #[test]
    fn frobenius_decomposes_through_delta((pi, f, seed) in params()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::scalar(&ctx, &mut rng);
        let rebuilt = &a.pow_p() + &a.delta().unwrap().mul_p_pow(1);
        prop_assert!(a.frobenius(1).agrees_to(&rebuilt, N - 1));
        prop_assert!(a.frobenius(1).agrees_to(&rebuilt, N));
    }

    #[test]
    fn frobenius_is_a_ring_automorphism((pi, f, seed) in params(), r in -3i64..4) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::scalar(&ctx, &mut rng);
        let b = sample::scalar(&ctx, &mut rng);
        prop_assert_eq!((&a + &b).frobenius(r), &a.frobenius(r) + &b.frobenius(r));
        prop_assert_eq!((&a * &b).frobenius(r), &a.frobenius(r) * &b.frobenius(r));
        prop_assert_eq!(a.frobenius(r).frobenius(-r), a.clone());
        prop_assert_eq!(a.frobenius(1).residue(), a.pow(ctx.p() as u128).residue());
        if f == 1 {
            prop_assert_eq!(a.frobenius(r), a);
        }
    }

    #[test]
    fn unit_inverse_and_identities((pi, f, seed) in params()) {
        let ctx = context(pi, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::unit(&ctx, &mut rng);
        prop_assert_eq!(&a * &a.inv().unwrap(), PadicScalar::one(&ctx));
        prop_assert_eq!(&a + &PadicScalar::zero(&ctx), a.clone());
        prop_assert_eq!(&a - &a, PadicScalar::zero(&ctx));
    }

    #[test]
    fn principal_root_is_unique((pi, f, seed) in params(), nu in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3, 4])) {
        let ctx = context(pi, f);
        prop_assume!(nu.unsigned_abs() % ctx.p() != 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = sample::one_unit(&ctx, &mut rng);
        let r = u.principal_root(nu).unwrap();
        prop_assert!(r.is_one_unit());
        prop_assert_eq!(r.prec(), N);
        // r^ν = u
        let pow = if nu > 0 { r.pow(nu as u128) } else { r.pow((-nu) as u128).inv().unwrap() };
        prop_assert_eq!(pow, u.clone());
        // Independent construction: Newton on X^|ν| − u^{sign ν} from X = 1.
        let target = if nu > 0 { u.clone() } else { u.inv().unwrap() };
        let k = nu.unsigned_abs() as usize;
        let mut poly = vec![PadicScalar::zero(&ctx); k + 1];
        poly[0] = -&target;
        poly[k] = PadicScalar::one(&ctx);
        let hensel = newton_root(&poly, &PadicScalar::one(&ctx)).unwrap();
        prop_assert_eq!(hensel, r);
    }
}
