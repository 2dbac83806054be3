use padic_core::PadicScalar;

use crate::matrix::PMatrix;

/// Coefficients of `det(s·1_n − a) = Σ_i (−1)^i P_i(a) s^{n−i}` and the
/// discriminant `D*(a)` of that polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyData {
    /// `P_0 = 1, P_1 = tr(a), …, P_n = det(a)`.
    pub p: Vec<PadicScalar>,
    /// Discriminant of the characteristic polynomial.
    pub discriminant: PadicScalar,
}

impl CharPolyData {
    /// Coefficients `c_k` of `s^{n−k}` in `det(s·1_n − a)`, i.e. `(−1)^k P_k`.
    pub fn monic_coeffs(&self) -> Vec<PadicScalar> {
        self.p
            .iter()
            .enumerate()
            .map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() })
            .collect()
    }

    /// True when the discriminant is a unit (the matrix is regular).
    pub fn is_regular(&self) -> bool {
        self.discriminant.is_unit()
    }
}

/// Division-free (Berkowitz) characteristic polynomial: returns `c_0 = 1,
/// c_1, …, c_n` with `det(s·1_n − a) = Σ_k c_k s^{n−k}`.
pub fn berkowitz(a: &PMatrix) -> Vec<PadicScalar> {
    let n = a.n();
    let ctx = a.ctx();
    let one = PadicScalar::one(ctx);
    if n == 0 {
        return vec![one];
    }
    let mut poly = vec![one.clone(), -a.get(0, 0)];
    for r in 1..n {
        // Toeplitz column: 1, −a_rr, −R C, −R A C, …, −R A^{r−1} C
        let mut t = Vec::with_capacity(r + 2);
        t.push(one.clone());
        t.push(-a.get(r, r));
        let mut w: Vec<PadicScalar> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for k in 0..r {
            let mut dot = PadicScalar::zero(ctx);
            for (j, wj) in w.iter().enumerate() {
                dot = &dot + &(a.get(r, j) * wj);
            }
            t.push(-dot);
            if k + 1 < r {
                w = (0..r)
                    .map(|i| {
                        let mut acc = PadicScalar::zero(ctx);
                        for (j, wj) in w.iter().enumerate() {
                            acc = &acc + &(a.get(i, j) * wj);
                        }
                        acc
                    })
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..=r + 1 {
            let mut acc = PadicScalar::zero(ctx);
            for j in 0..=i.min(r) {
                acc = &acc + &(&t[i - j] * &poly[j]);
            }
            next.push(acc);
        }
        poly = next;
    }
    poly
}

/// Determinant of the Sylvester matrix of two polynomials given with the
/// leading coefficient first.
fn resultant(f: &[PadicScalar], g: &[PadicScalar]) -> PadicScalar {
    let ctx = f[0].ctx().clone();
    let m = f.len() - 1;
    let k = g.len() - 1;
    let size = m + k;
    if size == 0 {
        return PadicScalar::one(&ctx);
    }
    let zero = PadicScalar::zero(&ctx);
    let syl = PMatrix::from_fn(&ctx, size, |i, j| {
        if i < k {
            j.checked_sub(i).and_then(|d| f.get(d)).cloned().unwrap_or_else(|| zero.clone())
        } else {
            let i = i - k;
            j.checked_sub(i).and_then(|d| g.get(d)).cloned().unwrap_or_else(|| zero.clone())
        }
    });
    syl.det()
}

/// Discriminant of a monic polynomial given with the leading coefficient
/// first: `(−1)^{n(n−1)/2} Res(P, P′)`.
pub fn discriminant(monic: &[PadicScalar]) -> PadicScalar {
    let n = monic.len() - 1;
    let ctx = monic[0].ctx().clone();
    if n <= 1 {
        return PadicScalar::one(&ctx);
    }
    let deriv: Vec<PadicScalar> = (0..n)
        .map(|k| &monic[k] * &PadicScalar::from_i64(&ctx, (n - k) as i64))
        .collect();
    let r = resultant(monic, &deriv);
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Characteristic polynomial coefficients `P_i` and discriminant `D*`.
pub fn char_poly(a: &PMatrix) -> CharPolyData {
    let c = berkowitz(a);
    let disc = discriminant(&c);
    let p = c
        .iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() })
        .collect();
    CharPolyData { p, discriminant: disc }
}

/// The adjugate `adj(a)`, with `adj(a)·a = a·adj(a) = det(a)·1`.
pub fn adjugate(a: &PMatrix) -> PMatrix {
    let n = a.n();
    if n == 1 {
        return PMatrix::identity(a.ctx(), 1);
    }
    PMatrix::from_fn(a.ctx(), n, |i, j| {
        let d = a.minor(j, i).det();
        if (i + j) % 2 == 1 {
            -d
        } else {
            d
        }
    })
}
