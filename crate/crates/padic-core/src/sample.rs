//! Random sampling of ring elements, uniform over the coordinates mod `p^N`.

use rand::Rng;

use crate::context::Ctx;
use crate::scalar::PadicScalar;

/// A uniformly random element at full precision.
pub fn scalar<R: Rng + ?Sized>(ctx: &Ctx, rng: &mut R) -> PadicScalar {
    let m = ctx.modulus_value();
    let c: Vec<u64> = (0..ctx.f()).map(|_| rng.random_range(0..m)).collect();
    PadicScalar::from_residues(ctx, &c, ctx.precision())
}

/// A uniformly random unit (rejection sampling).
pub fn unit<R: Rng + ?Sized>(ctx: &Ctx, rng: &mut R) -> PadicScalar {
    loop {
        let x = scalar(ctx, rng);
        if x.is_unit() {
            return x;
        }
    }
}

/// A uniformly random 1-unit `1 + p·v`.
pub fn one_unit<R: Rng + ?Sized>(ctx: &Ctx, rng: &mut R) -> PadicScalar {
    &PadicScalar::one(ctx) + &scalar(ctx, rng).mul_p_pow(1)
}

/// A uniformly random residue, as coordinates in `[0, p)`.
pub fn residue<R: Rng + ?Sized>(ctx: &Ctx, rng: &mut R) -> Vec<u64> {
    (0..ctx.f()).map(|_| rng.random_range(0..ctx.p())).collect()
}
