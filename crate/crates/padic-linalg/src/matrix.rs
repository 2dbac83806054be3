use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use padic_core::{Ctx, Error, PadicScalar, Result};

use crate::charpoly::berkowitz;

/// A dense `n × n` matrix over `W(F_{p^f}) / p^N`, stored row-major.
///
/// Shape mismatches in the arithmetic operators are programming errors and
/// panic; input validation at API boundaries reports
/// [`Error::DimensionMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct PMatrix {
    ctx: Ctx,
    n: usize,
    data: Vec<PadicScalar>,
}

impl fmt::Debug for PMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PMatrix {}x{} (prec {})", self.n, self.n, self.prec())?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.data[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl PMatrix {
    /// Builds a matrix from `n²` row-major entries.
    pub fn new(ctx: &Ctx, n: usize, data: Vec<PadicScalar>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        for x in &data {
            if !std::sync::Arc::ptr_eq(x.ctx(), ctx) && **x.ctx() != **ctx {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(PMatrix { ctx: ctx.clone(), n, data })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(ctx: &Ctx, n: usize, mut f: impl FnMut(usize, usize) -> PadicScalar) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        PMatrix { ctx: ctx.clone(), n, data }
    }

    /// Builds a matrix from integer rows (full precision).
    pub fn from_i64(ctx: &Ctx, rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        Self::from_fn(ctx, n, |i, j| PadicScalar::from_i64(ctx, rows[i][j]))
    }

    pub fn zero(ctx: &Ctx, n: usize) -> Self {
        Self::from_fn(ctx, n, |_, _| PadicScalar::zero(ctx))
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        Self::scalar(&PadicScalar::one(ctx), n)
    }

    /// `s · 1_n`.
    pub fn scalar(s: &PadicScalar, n: usize) -> Self {
        let zero = PadicScalar::zero(s.ctx()).with_prec(s.prec());
        Self::from_fn(s.ctx(), n, |i, j| if i == j { s.clone() } else { zero.clone() })
    }

    /// The diagonal matrix with the given entries.
    pub fn diag(entries: &[PadicScalar]) -> Self {
        let ctx = entries[0].ctx().clone();
        let zero = PadicScalar::zero(&ctx);
        Self::from_fn(&ctx, entries.len(), |i, j| if i == j { entries[i].clone() } else { zero.clone() })
    }

    /// The permutation matrix `w_σ = [e_{σ(1)}, …, e_{σ(n)}]` (column `j` is `e_{σ(j)}`).
    pub fn permutation(ctx: &Ctx, sigma: &[usize]) -> Self {
        Self::from_fn(ctx, sigma.len(), |i, j| {
            PadicScalar::from_i64(ctx, if sigma[j] == i { 1 } else { 0 })
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// The dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &PadicScalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PadicScalar) {
        self.data[i * self.n + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[PadicScalar] {
        &self.data
    }

    /// The diagonal entries.
    pub fn diagonal(&self) -> Vec<PadicScalar> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Minimum precision over all entries.
    pub fn prec(&self) -> u32 {
        self.data.iter().map(|x| x.prec()).min().unwrap_or(self.ctx.precision())
    }

    pub fn map(&self, f: impl Fn(&PadicScalar) -> PadicScalar) -> Self {
        PMatrix { ctx: self.ctx.clone(), n: self.n, data: self.data.iter().map(f).collect() }
    }

    fn try_map(&self, f: impl Fn(&PadicScalar) -> Result<PadicScalar>) -> Result<Self> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PMatrix { ctx: self.ctx.clone(), n: self.n, data })
    }

    /// Truncates every entry to precision `k`.
    pub fn with_prec(&self, k: u32) -> Self {
        self.map(|x| x.with_prec(k))
    }

    /// Reinterprets canonical representatives at precision `k`.
    pub fn lift_to(&self, k: u32) -> Self {
        self.map(|x| x.lift_to(k))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> PadicScalar {
        let mut acc = PadicScalar::zero(&self.ctx);
        for i in 0..self.n {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: &PadicScalar) -> Self {
        self.map(|x| x * s)
    }

    /// The entrywise `p`-th power `a^{(p)}` (one digit more precise).
    pub fn p_power(&self) -> Self {
        self.map(|x| x.pow_p())
    }

    /// The entrywise `p^s`-th power `a^{(p^s)}`.
    pub fn p_power_iter(&self, s: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..s {
            out = out.p_power();
        }
        out
    }

    /// The entrywise Frobenius `φ^r(a)`.
    pub fn frobenius(&self, r: i64) -> Self {
        self.map(|x| x.frobenius(r))
    }

    /// The entrywise p-derivation `δa`.
    pub fn delta(&self) -> Result<Self> {
        self.try_map(|x| x.delta())
    }

    /// Exact entrywise division by `p^k`.
    pub fn div_p_exact(&self, k: u32) -> Result<Self> {
        self.try_map(|x| x.div_p_exact(k))
    }

    /// Multiplication by `p^k`, gaining `k` digits of precision.
    pub fn mul_p_pow(&self, k: u32) -> Self {
        self.map(|x| x.mul_p_pow(k))
    }

    /// `a^e` for `e ≥ 0`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(&self.ctx, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Determinant, computed division-free.
    pub fn det(&self) -> PadicScalar {
        let c = berkowitz(self);
        let last = c[self.n].clone();
        if self.n % 2 == 1 {
            -last
        } else {
            last
        }
    }

    /// True when the determinant is a unit.
    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    /// Inverse by Gauss–Jordan elimination, pivoting on unit entries.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(&self.ctx, n).with_prec(self.prec()).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col].is_unit()).ok_or(Error::NotInvertible)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let s = a[col * n + col].inv()?;
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &s;
                inv[col * n + j] = &inv[col * n + j] * &s;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = &a[r * n + j] - &(&factor * &a[col * n + j]);
                    inv[r * n + j] = &inv[r * n + j] - &(&factor * &inv[col * n + j]);
                }
            }
        }
        Ok(PMatrix { ctx: self.ctx.clone(), n, data: inv })
    }

    /// Whether both matrices are known to precision `k` and agree mod `p^k`.
    pub fn agrees_to(&self, other: &Self, k: u32) -> bool {
        self.n == other.n && self.data.iter().zip(&other.data).all(|(a, b)| a.agrees_to(b, k))
    }

    /// Minimum valuation of the entries of `self − other` (capped by the
    /// precision of the difference).
    pub fn diff_valuation(&self, other: &Self) -> u32 {
        (self - other).valuation()
    }

    /// Minimum valuation of the entries (capped by precision).
    pub fn valuation(&self) -> u32 {
        self.data.iter().map(|x| x.valuation()).min().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// True when `self ≡ 1_n (mod p)`.
    pub fn is_one_unit(&self) -> bool {
        let id = Self::identity(&self.ctx, self.n);
        (self - &id).valuation() >= 1 && self.prec() >= 1
    }

    /// Residues mod `p`, row-major.
    pub fn residue(&self) -> Vec<Vec<u64>> {
        self.data.iter().map(|x| x.residue()).collect()
    }

    /// True for monomial matrices (one unit entry per row and column, all
    /// other entries zero), i.e. elements of the torus normalizer `N`.
    pub fn is_monomial(&self) -> bool {
        let n = self.n;
        let mut col_used = vec![false; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if !x.is_unit() || found.is_some() {
                    return false;
                }
                found = Some(j);
            }
            match found {
                Some(j) if !col_used[j] => col_used[j] = true,
                _ => return false,
            }
        }
        true
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// The square submatrix obtained by deleting row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.n - 1;
        Self::from_fn(&self.ctx, n, |i, j| {
            let ii = if i < r { i } else { i + 1 };
            let jj = if j < c { j } else { j + 1 };
            self.get(ii, jj).clone()
        })
    }

    /// Checks that `other` has the same shape and context.
    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.n, self.n, other.n, other.n)));
        }
        if !std::sync::Arc::ptr_eq(&self.ctx, &other.ctx) && *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(&PadicScalar, &PadicScalar) -> PadicScalar) -> Self {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        PMatrix {
            ctx: self.ctx.clone(),
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &PMatrix {
    type Output = PMatrix;
    fn add(self, rhs: &PMatrix) -> PMatrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &PMatrix {
    type Output = PMatrix;
    fn sub(self, rhs: &PMatrix) -> PMatrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &PMatrix {
    type Output = PMatrix;
    fn neg(self) -> PMatrix {
        self.map(|a| -a)
    }
}

impl Mul for &PMatrix {
    type Output = PMatrix;
    fn mul(self, rhs: &PMatrix) -> PMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.get(i, 0) * rhs.get(0, j);
                for k in 1..n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                data.push(acc);
            }
        }
        PMatrix { ctx: self.ctx.clone(), n, data }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PMatrix {
            type Output = PMatrix;
            fn $method(self, rhs: PMatrix) -> PMatrix {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PMatrix> for PMatrix {
            type Output = PMatrix;
            fn $method(self, rhs: &PMatrix) -> PMatrix {
                (&self).$method(rhs)
            }
        }
        impl $tr<PMatrix> for &PMatrix {
            type Output = PMatrix;
            fn $method(self, rhs: PMatrix) -> PMatrix {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PMatrix {
    type Output = PMatrix;
    fn neg(self) -> PMatrix {
        -&self
    }
}
