use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::scalar::PadicScalar;

/// One term `coeff · p^shift · V^m` of the principal-root series
/// `(1 + pV)^{1/ν} = Σ_m binom(1/ν, m) p^m V^m`.
#[derive(Debug, Clone)]
pub struct RootTerm {
    /// The power `m ≥ 1` of `V`.
    pub m: u32,
    /// `m − v_p(m!)`, the exact power of `p` carried by the term (always ≥ 1).
    pub shift: u32,
    /// The p-adic integer `binom(1/ν, m) · m!_p / p^{…}` left after removing
    /// `p^shift`; it is `Π_{j<m}(1 − jν) / (ν^m · m!')` where `m!'` is the
    /// prime-to-p part of `m!`.
    pub coeff: PadicScalar,
}

/// The non-vanishing terms of the binomial series for the principal
/// `ν`-th root at precision `prec`, in increasing order of `m`.
///
/// Only terms with `shift < prec` are returned; the others vanish modulo
/// `p^prec` because `V` is integral.
pub fn binomial_root_terms(ctx: &Ctx, nu: i64, prec: u32) -> Result<Vec<RootTerm>> {
    let p = ctx.p();
    if nu == 0 || nu.unsigned_abs() % p == 0 {
        return Err(Error::NuDivisibleByP { nu });
    }
    let nu_s = PadicScalar::from_i64(ctx, nu);
    let nu_inv = nu_s.inv()?;
    let mut numer = PadicScalar::one(ctx); // Π_{j<m} (1 − jν)
    let mut nu_pow_inv = PadicScalar::one(ctx); // ν^{-m}
    let mut fact_unit = PadicScalar::one(ctx); // prime-to-p part of m!
    let mut fact_val = 0u32; // v_p(m!)
    let mut out = Vec::new();
    let mut m = 0u32;
    loop {
        // advance from m to m + 1
        numer = &numer * &PadicScalar::from_i128(ctx, 1 - (m as i128) * (nu as i128));
        nu_pow_inv = &nu_pow_inv * &nu_inv;
        m += 1;
        let mut k = m as u64;
        while k % p == 0 {
            k /= p;
            fact_val += 1;
        }
        fact_unit = &fact_unit * &PadicScalar::from_i128(ctx, k as i128);
        let shift = m - fact_val;
        if shift < prec {
            let coeff = &(&numer * &nu_pow_inv) * &fact_unit.inv()?;
            out.push(RootTerm { m, shift, coeff });
        }
        // v_p(m'!) ≤ (m' − 1)/(p − 1), so shift(m') ≥ (m'(p − 2) + 1)/(p − 1);
        // once that bound reaches `prec` for m' = m + 1, no later term survives.
        let next = m as u64 + 1;
        if (next * (p - 2) + 1) >= prec as u64 * (p - 1) {
            break;
        }
    }
    Ok(out)
}
