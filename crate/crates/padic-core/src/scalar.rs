use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::context::{mulmod, Ctx};
use crate::error::{Error, Result};
use crate::series::binomial_root_terms;

/// An element of `W(F_{p^f}) / p^k` with tracked absolute precision `k ≤ N`.
///
/// Coefficients are kept reduced into `[0, p^k)`.  Ring operations return
/// the minimum of the operand precisions.  Mixing values from different
/// contexts is a programming error and panics; use
/// [`PadicScalar::check_same_context`] at API boundaries.
#[derive(Clone)]
pub struct PadicScalar {
    ctx: Ctx,
    c: Vec<u64>,
    prec: u32,
}

impl fmt::Debug for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.f() == 1 {
            write!(f, "{} (mod {}^{})", self.c[0], self.ctx.p(), self.prec)
        } else {
            write!(f, "{:?} (mod {}^{})", self.c, self.ctx.p(), self.prec)
        }
    }
}

impl PartialEq for PadicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.prec == other.prec && self.c == other.c
    }
}

impl Eq for PadicScalar {}

impl PadicScalar {
    fn raw(ctx: &Ctx, c: Vec<u64>, prec: u32) -> Self {
        PadicScalar { ctx: ctx.clone(), c, prec }
    }

    fn modulus_at(&self) -> u64 {
        self.ctx.p_pow(self.prec)
    }

    /// The additive identity at full precision.
    pub fn zero(ctx: &Ctx) -> Self {
        Self::raw(ctx, vec![0; ctx.f()], ctx.precision())
    }

    /// The multiplicative identity at full precision.
    pub fn one(ctx: &Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }

    /// Embeds an integer at full precision.
    pub fn from_i64(ctx: &Ctx, v: i64) -> Self {
        Self::from_i128(ctx, v as i128)
    }

    /// Embeds an integer at full precision.
    pub fn from_i128(ctx: &Ctx, v: i128) -> Self {
        let m = ctx.modulus_value() as i128;
        let mut c = vec![0; ctx.f()];
        c[0] = v.rem_euclid(m) as u64;
        Self::raw(ctx, c, ctx.precision())
    }

    /// Builds a value from integer coordinates on the power basis, reducing
    /// them mod `p^prec`.
    pub fn from_coeffs(ctx: &Ctx, coeffs: &[i128], prec: u32) -> Result<Self> {
        if coeffs.len() != ctx.f() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                ctx.f(),
                coeffs.len()
            )));
        }
        if prec > ctx.precision() {
            return Err(Error::InsufficientPrecision { needed: prec, available: ctx.precision() });
        }
        let m = ctx.p_pow(prec) as i128;
        let c = coeffs.iter().map(|v| v.rem_euclid(m) as u64).collect();
        Ok(Self::raw(ctx, c, prec))
    }

    /// Builds a value from non-negative coordinates (reduced mod `p^prec`).
    pub fn from_residues(ctx: &Ctx, coeffs: &[u64], prec: u32) -> Self {
        assert_eq!(coeffs.len(), ctx.f(), "coefficient count must equal f");
        let prec = prec.min(ctx.precision());
        let m = ctx.p_pow(prec);
        Self::raw(ctx, coeffs.iter().map(|v| v % m).collect(), prec)
    }

    /// The context this value belongs to.
    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Canonical coordinates in `[0, p^prec)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Known absolute precision.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Whether both values live in the same context.
    pub fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }

    /// Returns [`Error::ContextMismatch`] unless both values share a context.
    pub fn check_same_context(&self, other: &Self) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn assert_ctx(&self, other: &Self) {
        assert!(self.same_context(other), "{}", Error::ContextMismatch);
    }

    /// Truncates to precision `k` (values above the current precision are
    /// clamped; precision is never invented).
    pub fn with_prec(&self, k: u32) -> Self {
        let k = k.min(self.prec);
        let m = self.ctx.p_pow(k);
        Self::raw(&self.ctx, self.c.iter().map(|v| v % m).collect(), k)
    }

    /// Reinterprets the canonical representative at a higher precision
    /// (used to start a lifting process whose new digits are unknowns).
    pub fn lift_to(&self, k: u32) -> Self {
        let k = k.min(self.ctx.precision());
        Self::raw(&self.ctx, self.c.clone(), k.max(self.prec)).with_prec(k)
    }

    /// p-adic valuation, capped at the precision (so a value that is zero at
    /// its precision reports `prec`).
    pub fn valuation(&self) -> u32 {
        let p = self.ctx.p();
        let mut best = self.prec;
        for &v in &self.c {
            if v == 0 {
                continue;
            }
            let mut x = v;
            let mut k = 0;
            while x % p == 0 {
                x /= p;
                k += 1;
            }
            best = best.min(k);
        }
        best
    }

    /// True when the value is zero at its precision.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    /// True when the reduction mod `p` is non-zero.
    pub fn is_unit(&self) -> bool {
        self.prec > 0 && self.c.iter().any(|&v| v % self.ctx.p() != 0)
    }

    /// True when `self ≡ 1 (mod p)`.
    pub fn is_one_unit(&self) -> bool {
        let p = self.ctx.p();
        self.prec > 0
            && self.c.iter().enumerate().all(|(i, &v)| v % p == if i == 0 { 1 } else { 0 })
    }

    /// Residue mod `p`, as coordinates in `[0, p)`.
    pub fn residue(&self) -> Vec<u64> {
        let p = self.ctx.p();
        self.c.iter().map(|v| v % p).collect()
    }

    /// Whether `self` and `other` are both known to precision `k` and agree
    /// modulo `p^k`.
    pub fn agrees_to(&self, other: &Self, k: u32) -> bool {
        self.assert_ctx(other);
        if self.prec < k || other.prec < k {
            return false;
        }
        let m = self.ctx.p_pow(k);
        self.c.iter().zip(&other.c).all(|(a, b)| a % m == b % m)
    }

    /// For `f = 1`, the representative in `(-p^k/2, p^k/2]`.
    pub fn to_balanced_i128(&self) -> Option<i128> {
        if self.ctx.f() != 1 {
            return None;
        }
        let m = self.modulus_at() as i128;
        let v = self.c[0] as i128;
        Some(if 2 * v > m { v - m } else { v })
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let c = self.ctx.raw_inv(&self.c, self.prec).ok_or(Error::NotAUnit)?;
        Ok(Self::raw(&self.ctx, c, self.prec))
    }

    /// `self^e` at the precision of `self`.
    pub fn pow(&self, e: u128) -> Self {
        let c = self.ctx.raw_pow(&self.c, e, self.modulus_at());
        Self::raw(&self.ctx, c, self.prec)
    }

    /// `self^p`, which is known to one more digit than `self`:
    /// `(a + p^k h)^p ≡ a^p (mod p^{k+1})`.
    pub fn pow_p(&self) -> Self {
        let k = (self.prec + 1).min(self.ctx.precision());
        let c = self.ctx.raw_pow(&self.c, self.ctx.p() as u128, self.ctx.p_pow(k));
        Self::raw(&self.ctx, c, k)
    }

    /// `φ^r(self)` for any integer `r` (φ has order `f`).
    pub fn frobenius(&self, r: i64) -> Self {
        let f = self.ctx.f() as i64;
        let r = r.rem_euclid(f) as usize;
        let c = self.ctx.raw_frobenius(&self.c, r, self.modulus_at());
        Self::raw(&self.ctx, c, self.prec)
    }

    /// Multiplies by `p^k`; the result is known to `k` more digits (capped
    /// at the working precision).
    pub fn mul_p_pow(&self, k: u32) -> Self {
        let prec = (self.prec + k).min(self.ctx.precision());
        let m = self.ctx.p_pow(prec);
        let scale = self.ctx.p_pow(k.min(self.ctx.precision()));
        let c = if k > self.ctx.precision() {
            vec![0; self.c.len()]
        } else {
            self.c.iter().map(|&v| mulmod(v, scale, m)).collect()
        };
        Self::raw(&self.ctx, c, prec)
    }

    /// Exact division by `p^k`, consuming `k` digits of precision.
    pub fn div_p_exact(&self, k: u32) -> Result<Self> {
        if self.prec < k + 1 {
            return Err(Error::InsufficientPrecision { needed: k + 1, available: self.prec });
        }
        if self.valuation() < k {
            return Err(Error::NotDivisible { k });
        }
        let d = self.ctx.p_pow(k);
        Ok(Self::raw(&self.ctx, self.c.iter().map(|v| v / d).collect(), self.prec - k))
    }

    /// The p-derivation `δ(x) = (φ(x) − x^p)/p`, one digit less precise.
    pub fn delta(&self) -> Result<Self> {
        if self.prec < 2 {
            return Err(Error::InsufficientPrecision { needed: 2, available: self.prec });
        }
        (&self.frobenius(1) - &self.pow_p()).div_p_exact(1)
    }

    /// The unique `ν`-th root of a 1-unit that is itself `≡ 1 (mod p)`,
    /// computed by the binomial series `Σ binom(1/ν, m) p^m V^m` where
    /// `self = 1 + pV`.  No precision is lost.
    pub fn principal_root(&self, nu: i64) -> Result<Self> {
        if nu == 0 || nu.unsigned_abs() % self.ctx.p() == 0 {
            return Err(Error::NuDivisibleByP { nu });
        }
        if !self.is_one_unit() {
            return Err(Error::NotOneUnit);
        }
        let one = Self::one(&self.ctx).with_prec(self.prec);
        if self.prec < 2 {
            return Ok(one);
        }
        let v = (self - &one).div_p_exact(1)?;
        let mut acc = one;
        let mut vm = Self::one(&self.ctx).with_prec(v.prec);
        for term in binomial_root_terms(&self.ctx, nu, self.prec)? {
            vm = &vm * &v;
            acc = &acc + &(&vm * &term.coeff).mul_p_pow(term.shift);
        }
        Ok(acc)
    }

    /// The Teichmüller representative of a residue class, given by its
    /// coordinates mod `p`.
    pub fn teichmuller(ctx: &Ctx, residue: &[u64]) -> Self {
        let q = (ctx.p() as u128).pow(ctx.f() as u32);
        let mut x = Self::from_residues(ctx, residue, ctx.precision());
        for _ in 0..ctx.precision() {
            let next = x.pow(q);
            if next == x {
                break;
            }
            x = next;
        }
        x
    }

    /// Iterates over all elements of the residue field as coordinate vectors.
    pub fn residue_field(ctx: &Ctx) -> Result<impl Iterator<Item = Vec<u64>>> {
        let size = ctx
            .residue_field_size()
            .filter(|&s| s <= 1 << 20)
            .ok_or_else(|| Error::TooLarge("residue field has more than 2^20 elements".into()))?;
        let p = ctx.p();
        let f = ctx.f();
        Ok((0..size).map(move |idx| {
            let mut v = Vec::with_capacity(f);
            let mut x = idx;
            for _ in 0..f {
                v.push(x % p);
                x /= p;
            }
            v
        }))
    }

    /// A square root of `-1`, Hensel-lifted from the residue field.
    pub fn sqrt_minus_one(ctx: &Ctx) -> Result<Self> {
        let one = Self::one(ctx);
        let poly = [one.clone(), Self::zero(ctx), one];
        for r in Self::residue_field(ctx)? {
            let x = Self::from_residues(ctx, &r, 1);
            if (&(&x * &x) + &Self::one(ctx)).is_zero() {
                return crate::poly::newton_root(&poly, &x);
            }
        }
        Err(Error::NoSqrtMinusOne)
    }
}

fn binary<F: Fn(u64, u64, u64) -> u64>(a: &PadicScalar, b: &PadicScalar, op: F) -> PadicScalar {
    a.assert_ctx(b);
    let prec = a.prec.min(b.prec);
    let m = a.ctx.p_pow(prec);
    let c = a.c.iter().zip(&b.c).map(|(&x, &y)| op(x % m, y % m, m)).collect();
    PadicScalar::raw(&a.ctx, c, prec)
}

impl Add for &PadicScalar {
    type Output = PadicScalar;
    fn add(self, rhs: &PadicScalar) -> PadicScalar {
        binary(self, rhs, |x, y, m| (x + y) % m)
    }
}

impl Sub for &PadicScalar {
    type Output = PadicScalar;
    fn sub(self, rhs: &PadicScalar) -> PadicScalar {
        binary(self, rhs, |x, y, m| (x + m - y) % m)
    }
}

impl Mul for &PadicScalar {
    type Output = PadicScalar;
    fn mul(self, rhs: &PadicScalar) -> PadicScalar {
        self.assert_ctx(rhs);
        let prec = self.prec.min(rhs.prec);
        let c = self.ctx.raw_mul(&self.c, &rhs.c, self.ctx.p_pow(prec));
        PadicScalar::raw(&self.ctx, c, prec)
    }
}

impl Neg for &PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        let m = self.modulus_at();
        PadicScalar::raw(&self.ctx, self.c.iter().map(|&v| (m - v) % m).collect(), self.prec)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PadicScalar {
            type Output = PadicScalar;
            fn $method(self, rhs: PadicScalar) -> PadicScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PadicScalar> for PadicScalar {
            type Output = PadicScalar;
            fn $method(self, rhs: &PadicScalar) -> PadicScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PadicContext;

    fn ctx(p: u64, f: usize, n: u32) -> Ctx {
        PadicContext::new(p, f, n).unwrap()
    }

    #[test]
    fn inverse_of_two_mod_625() {
        let c = ctx(5, 1, 4);
        let two = PadicScalar::from_i64(&c, 2);
        let inv = two.inv().unwrap();
        // Oracle: brute-force search for the inverse of 2 mod 625.
        let oracle = (0..625u64).find(|x| (2 * x) % 625 == 1).unwrap();
        assert_eq!(inv.coeffs(), &[oracle]);
        assert_eq!(oracle, 313);
    }

    #[test]
    fn delta_of_two_at_five() {
        let c = ctx(5, 1, 6);
        let d = PadicScalar::from_i64(&c, 2).delta().unwrap();
        // Oracle: integer Fermat quotient (2 - 2^5)/5.
        let oracle: i128 = (2 - 2i128.pow(5)) / 5;
        assert_eq!(d.to_balanced_i128(), Some(oracle));
        assert_eq!(oracle, -6);
        assert_eq!(d.prec(), 5);
    }

    #[test]
    fn delta_of_constants() {
        for f in 1..=2 {
            let c = ctx(3, f, 6);
            assert!(PadicScalar::one(&c).delta().unwrap().is_zero());
            assert!(PadicScalar::zero(&c).delta().unwrap().is_zero());
            for r in PadicScalar::residue_field(&c).unwrap() {
                let t = PadicScalar::teichmuller(&c, &r);
                assert!(t.delta().unwrap().is_zero(), "δ(ω({r:?})) ≠ 0");
            }
        }
    }

    #[test]
    fn exact_division() {
        let c = ctx(3, 1, 6);
        let q = PadicScalar::from_i64(&c, 18).div_p_exact(2).unwrap();
        assert_eq!(q.to_balanced_i128(), Some(18 / 9));
        assert_eq!(q.prec(), 4);
        assert_eq!(
            PadicScalar::one(&c).div_p_exact(1),
            Err(Error::NotDivisible { k: 1 })
        );
    }

    #[test]
    fn principal_square_root_of_sixteen() {
        let c = ctx(5, 1, 6);
        let r = PadicScalar::from_i64(&c, 16).principal_root(2).unwrap();
        // Oracle: of the two integer square roots ±4, keep the one ≡ 1 mod 5.
        let oracle = [4i128, -4].into_iter().find(|x| x.rem_euclid(5) == 1).unwrap();
        assert_eq!(r.to_balanced_i128(), Some(oracle));
        assert_eq!(oracle, -4);
    }

    #[test]
    fn root_errors() {
        let c = ctx(5, 1, 6);
        let four = PadicScalar::from_i64(&c, 4);
        assert_eq!(four.principal_root(2), Err(Error::NotOneUnit));
        let six = PadicScalar::from_i64(&c, 6);
        assert_eq!(six.principal_root(5), Err(Error::NuDivisibleByP { nu: 5 }));
        assert_eq!(six.principal_root(0), Err(Error::NuDivisibleByP { nu: 0 }));
        assert_eq!(PadicScalar::one(&c).principal_root(3).unwrap(), PadicScalar::one(&c));
    }

    #[test]
    fn precision_propagation() {
        let c = ctx(7, 1, 10);
        let a = PadicScalar::from_i64(&c, 12).with_prec(4);
        let b = PadicScalar::from_i64(&c, 5);
        assert_eq!((&a + &b).prec(), 4);
        assert_eq!((&a * &b).prec(), 4);
        assert_eq!(a.pow_p().prec(), 5);
        assert_eq!(a.mul_p_pow(3).prec(), 7);
        assert_eq!(a.mul_p_pow(30).prec(), 10);
        assert_eq!(a.delta().unwrap().prec(), 3);
    }

    #[test]
    fn frobenius_on_teichmuller() {
        let c = ctx(5, 2, 6);
        for r in PadicScalar::residue_field(&c).unwrap() {
            let t = PadicScalar::teichmuller(&c, &r);
            let rp = PadicScalar::from_residues(&c, &r, 1).pow(5).residue();
            assert_eq!(t.frobenius(1), PadicScalar::teichmuller(&c, &rp));
        }
    }

    #[test]
    fn sqrt_minus_one_availability() {
        assert!(PadicScalar::sqrt_minus_one(&ctx(5, 1, 6)).is_ok());
        assert_eq!(PadicScalar::sqrt_minus_one(&ctx(7, 1, 6)), Err(Error::NoSqrtMinusOne));
        let c = ctx(7, 2, 6);
        let i = PadicScalar::sqrt_minus_one(&c).unwrap();
        assert_eq!(&i * &i, -PadicScalar::one(&c));
    }
}
