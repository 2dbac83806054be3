use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::fp;

/// Shared handle to an immutable [`PadicContext`].
pub type Ctx = Arc<PadicContext>;

/// Largest modulus `p^N` we accept; products of two residues must fit in `u128`.
const MAX_MODULUS: u128 = 1 << 62;

/// Ambient ring data for `W(F_{p^f}) / p^N`.
///
/// Immutable after construction; share it through [`Ctx`].
#[derive(Clone, PartialEq, Eq)]
pub struct PadicContext {
    p: u64,
    f: usize,
    n: u32,
    /// `pow[k] = p^k` for `k = 0..=N`.
    pow: Vec<u64>,
    /// Monic modulus `g`, low degree first, `f + 1` entries reduced mod `p^N`.
    modulus: Vec<u64>,
    /// `X^{f+i} mod g` for `i = 0..f-1`, used to reduce products.
    reduce: Vec<Vec<u64>>,
    /// `frob[r][i]` holds the coordinates of `φ^r(X)^i`, for `r < f`, `i < f`.
    frob: Vec<Vec<Vec<u64>>>,
}

impl fmt::Debug for PadicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PadicContext")
            .field("p", &self.p)
            .field("f", &self.f)
            .field("N", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PadicContext {
    /// Builds the context for `W(F_{p^f}) / p^N` with the default modulus:
    /// the lexicographically first monic irreducible polynomial of degree
    /// `f` over `F_p` (constant term first, coefficients in `[0, p)`).
    pub fn new(p: u64, f: usize, n: u32) -> Result<Ctx> {
        Self::check_params(p, f, n)?;
        let modulus = fp::first_irreducible(p, f);
        Self::build(p, f, n, modulus)
    }

    /// Builds the context from a user-supplied monic modulus (constant term
    /// first).  Coefficients may be any integers; they are reduced mod `p^N`.
    pub fn with_modulus(p: u64, n: u32, modulus: &[i128]) -> Result<Ctx> {
        if modulus.len() < 2 {
            return Err(Error::InvalidContext("modulus must have degree at least 1".into()));
        }
        let f = modulus.len() - 1;
        Self::check_params(p, f, n)?;
        let m = (p as u128).pow(n) as i128;
        let reduced: Vec<u64> = modulus.iter().map(|c| c.rem_euclid(m) as u64).collect();
        if reduced[f] != 1 {
            return Err(Error::InvalidContext("modulus must be monic".into()));
        }
        let residue: Vec<u64> = reduced.iter().map(|c| c % p).collect();
        if !fp::is_irreducible(&residue, p) {
            return Err(Error::InvalidContext("modulus is not irreducible mod p".into()));
        }
        Self::build(p, f, n, reduced)
    }

    fn check_params(p: u64, f: usize, n: u32) -> Result<()> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidContext(format!("p = {p} is not an odd prime")));
        }
        if f == 0 {
            return Err(Error::InvalidContext("residue degree f must be at least 1".into()));
        }
        if n < 2 {
            return Err(Error::InvalidContext("working precision N must be at least 2".into()));
        }
        let big = (p as u128).checked_pow(n).filter(|m| *m < MAX_MODULUS);
        if big.is_none() {
            return Err(Error::TooLarge(format!("p^N = {p}^{n} exceeds 2^62")));
        }
        if f > 16 {
            return Err(Error::TooLarge(format!("residue degree f = {f} exceeds 16")));
        }
        Ok(())
    }

    fn build(p: u64, f: usize, n: u32, modulus: Vec<u64>) -> Result<Ctx> {
        let pow: Vec<u64> = (0..=n).map(|k| p.pow(k)).collect();
        let big = pow[n as usize];
        let mut reduce = Vec::with_capacity(f.saturating_sub(1));
        // X^f = -(g_0 + g_1 X + ... + g_{f-1} X^{f-1})
        let mut cur: Vec<u64> = modulus[..f].iter().map(|c| (big - c % big) % big).collect();
        for _ in 0..f.saturating_sub(1) {
            reduce.push(cur.clone());
            // multiply by X
            let top = cur[f - 1];
            let mut next = vec![0u64; f];
            for i in (1..f).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..f {
                next[i] = (next[i] + mulmod(top, reduce[0][i], big)) % big;
            }
            cur = next;
        }
        let mut ctx = PadicContext { p, f, n, pow, modulus, reduce, frob: Vec::new() };
        ctx.frob = ctx.frobenius_tables();
        Ok(Arc::new(ctx))
    }

    /// The prime `p`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The residue degree `f`.
    pub fn f(&self) -> usize {
        self.f
    }

    /// The working precision `N`.
    pub fn precision(&self) -> u32 {
        self.n
    }

    /// `p^k` for `k ≤ N`.
    pub fn p_pow(&self, k: u32) -> u64 {
        self.pow[k as usize]
    }

    /// The modulus `p^N`.
    pub fn modulus_value(&self) -> u64 {
        self.pow[self.n as usize]
    }

    /// Coefficients of the monic modulus `g`, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Coordinates of `φ(X)`, the Frobenius image of the generator.
    pub fn frobenius_image(&self) -> &[u64] {
        if self.f == 1 {
            // The modulus is `X`, whose root is 0.
            &self.modulus[..1]
        } else {
            &self.frob[1][1]
        }
    }

    /// Number of elements of the residue field, `p^f`.
    pub fn residue_field_size(&self) -> Option<u64> {
        self.p.checked_pow(self.f as u32)
    }

    /// Product of two coefficient vectors reduced mod `g` and mod `m`.
    pub(crate) fn raw_mul(&self, a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
        let f = self.f;
        if f == 1 {
            return vec![mulmod(a[0], b[0], m)];
        }
        let mut wide = vec![0u64; 2 * f - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                wide[i + j] = (wide[i + j] + mulmod(x, y, m)) % m;
            }
        }
        let mut out = wide[..f].to_vec();
        for d in f..(2 * f - 1) {
            let c = wide[d];
            if c == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.reduce[d - f]) {
                *o = (*o + mulmod(c, r % m, m)) % m;
            }
        }
        out
    }

    pub(crate) fn raw_one(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.f];
        v[0] = 1;
        v
    }

    pub(crate) fn raw_pow(&self, a: &[u64], mut e: u128, m: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = self.raw_one();
        acc[0] %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.raw_mul(&base, &base, m);
            }
        }
        acc
    }

    /// Inverse of a unit mod `p^k`: residue inverse by Fermat, then Newton.
    pub(crate) fn raw_inv(&self, a: &[u64], k: u32) -> Option<Vec<u64>> {
        let p = self.p;
        let res: Vec<u64> = a.iter().map(|c| c % p).collect();
        if res.iter().all(|&c| c == 0) {
            return None;
        }
        let q = (p as u128).pow(self.f as u32);
        let mut y = self.raw_pow(&res, q - 2, p);
        let mut prec = 1u32;
        while prec < k {
            prec = (2 * prec).min(k);
            let m = self.pow[prec as usize];
            let ay = self.raw_mul(a, &y, m);
            let mut two_minus: Vec<u64> = ay.iter().map(|c| (m - c % m) % m).collect();
            two_minus[0] = (two_minus[0] + 2) % m;
            y = self.raw_mul(&y, &two_minus, m);
        }
        let m = self.pow[k as usize];
        Some(y.iter().map(|c| c % m).collect())
    }

    /// Evaluates `g` at `y` mod `p^N`.
    fn raw_eval_modulus(&self, y: &[u64], coeffs: &[u64]) -> Vec<u64> {
        let m = self.modulus_value();
        let mut acc = vec![0u64; self.f];
        for &c in coeffs.iter().rev() {
            acc = self.raw_mul(&acc, y, m);
            acc[0] = (acc[0] + c % m) % m;
        }
        acc
    }

    fn raw_sub(&self, a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x % m + m - y % m) % m).collect()
    }

    fn frobenius_tables(&self) -> Vec<Vec<Vec<u64>>> {
        let f = self.f;
        let m = self.modulus_value();
        if f == 1 {
            return vec![vec![vec![1]]];
        }
        // Newton iteration for the root of g congruent to X^p.
        let mut x = vec![0u64; f];
        x[1] = 1;
        let mut y = self.raw_pow(&x, self.p as u128, m);
        let deriv: Vec<u64> =
            (1..=f).map(|i| mulmod(self.modulus[i], i as u64, m)).collect();
        for _ in 0..(2 * self.n + 4) {
            let gy = self.raw_eval_modulus(&y, &self.modulus);
            if gy.iter().all(|&c| c == 0) {
                break;
            }
            let dy = self.raw_eval_modulus(&y, &deriv);
            let inv = self.raw_inv(&dy, self.n).expect("modulus is separable mod p");
            let step = self.raw_mul(&gy, &inv, m);
            y = self.raw_sub(&y, &step, m);
        }
        // frob_x[r] = φ^r(X)
        let mut frob_x = vec![x.clone(), y.clone()];
        for r in 2..f {
            let prev = frob_x[r - 1].clone();
            // φ^r(X) = φ^{r-1}(φ(X)) = Σ y_j φ^{r-1}(X)^j
            let mut acc = vec![0u64; f];
            let mut power = self.raw_one();
            for &yj in &y {
                for (a, c) in acc.iter_mut().zip(&power) {
                    *a = (*a + mulmod(yj, *c, m)) % m;
                }
                power = self.raw_mul(&power, &prev, m);
            }
            frob_x.push(acc);
        }
        frob_x
            .iter()
            .map(|g| {
                let mut powers = Vec::with_capacity(f);
                let mut cur = self.raw_one();
                for _ in 0..f {
                    powers.push(cur.clone());
                    cur = self.raw_mul(&cur, g, m);
                }
                powers
            })
            .collect()
    }

    /// Applies `φ^r` (with `0 ≤ r < f`) to a coefficient vector mod `m`.
    pub(crate) fn raw_frobenius(&self, a: &[u64], r: usize, m: u64) -> Vec<u64> {
        if r == 0 {
            return a.iter().map(|c| c % m).collect();
        }
        let table = &self.frob[r];
        let mut out = vec![0u64; self.f];
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&table[i]) {
                *o = (*o + mulmod(c, t % m, m)) % m;
            }
        }
        out
    }
}
