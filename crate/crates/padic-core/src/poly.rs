//! Polynomial helpers: Newton lifting of simple roots over the p-adic ring,
//! and small dense polynomial arithmetic over `F_p` used to choose moduli.

use crate::error::{Error, Result};
use crate::scalar::PadicScalar;

/// Evaluates `Σ coeffs[i]·x^i` (constant term first) by Horner's rule.
pub fn eval_poly(coeffs: &[PadicScalar], x: &PadicScalar) -> PadicScalar {
    let mut acc = PadicScalar::zero(x.ctx());
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Lifts a root of `Σ coeffs[i]·x^i` that is simple modulo `p`.
///
/// `start` must be a root modulo `p` at which the derivative is a unit; the
/// returned root agrees with `start` mod `p` and is exact at the precision of
/// the coefficients (capped by the context precision).
pub fn newton_root(coeffs: &[PadicScalar], start: &PadicScalar) -> Result<PadicScalar> {
    let ctx = start.ctx().clone();
    let target = coeffs.iter().map(|c| c.prec()).min().unwrap_or(ctx.precision());
    let deriv: Vec<PadicScalar> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * &PadicScalar::from_i64(&ctx, i as i64))
        .collect();
    let mut x = start.lift_to(target);
    if !eval_poly(coeffs, &x).with_prec(1).is_zero() {
        return Err(Error::DomainError("start is not a root mod p".into()));
    }
    let d0 = eval_poly(&deriv, &x);
    if !d0.is_unit() {
        return Err(Error::DomainError("root is not simple mod p".into()));
    }
    for _ in 0..(2 * target + 2) {
        let v = eval_poly(coeffs, &x);
        if v.is_zero() {
            break;
        }
        let d = eval_poly(&deriv, &x).inv()?;
        x = &x - &(&v * &d);
    }
    Ok(x)
}

/// Dense polynomials over the prime field `F_p`, constant term first.
pub(crate) mod fp {
    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for i in 0..=dm {
                let idx = dr - dm + i;
                r[idx] = (r[idx] + p - c * m[i] % p) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    fn pow_x(e: u128, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = rem(&[0, 1], m, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, m, p);
            }
            base = mul_mod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !(b.len() == 1 && b[0] == 0) {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub_x(a: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        if a.len() < 2 {
            a.resize(2, 0);
        }
        a[1] = (a[1] + p - 1) % p;
        trim(a)
    }

    fn prime_factors(mut n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                out.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Rabin's irreducibility test for a monic polynomial over `F_p`.
    pub fn is_irreducible(g: &[u64], p: u64) -> bool {
        let g = trim(g.to_vec());
        let f = g.len() - 1;
        if f == 0 {
            return false;
        }
        if f == 1 {
            return true;
        }
        let q = |k: usize| (p as u128).pow(k as u32);
        let full = pow_x(q(f), &g, p);
        if trim(sub_x(&full, p)) != vec![0] {
            return false;
        }
        for r in prime_factors(f) {
            let h = sub_x(&pow_x(q(f / r), &g, p), p);
            let d = gcd(&g, &h, p);
            if d.len() > 1 {
                return false;
            }
        }
        true
    }

    /// The lexicographically first monic irreducible polynomial of degree
    /// `f` over `F_p`, ordering coefficient tuples from the constant term
    /// upwards.  For `f = 1` this is `X`.
    pub fn first_irreducible(p: u64, f: usize) -> Vec<u64> {
        if f == 1 {
            return vec![0, 1];
        }
        let mut coeffs = vec![0u64; f];
        loop {
            // increment the counter, constant term is the least significant digit
            let mut i = 0;
            loop {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
                assert!(i < f, "an irreducible polynomial of every degree exists");
            }
            let mut g = coeffs.clone();
            g.push(1);
            if is_irreducible(&g, p) {
                return g;
            }
        }
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        /// Independent oracle: a degree-2 or degree-3 polynomial is
        /// irreducible iff it has no root in F_p.
        fn has_root(g: &[u64], p: u64) -> bool {
            (0..p).any(|x| {
                let mut acc = 0u64;
                for &c in g.iter().rev() {
                    acc = (acc * x + c) % p;
                }
                acc == 0
            })
        }

        #[test]
        fn rabin_matches_root_test_in_low_degree() {
            for &p in &[3u64, 5, 7] {
                for f in 2..=3usize {
                    let count = p.pow(f as u32);
                    for idx in 0..count {
                        let mut g: Vec<u64> =
                            (0..f).map(|i| (idx / p.pow(i as u32)) % p).collect();
                        g.push(1);
                        assert_eq!(is_irreducible(&g, p), !has_root(&g, p), "p={p} g={g:?}");
                    }
                }
            }
        }

        #[test]
        fn first_irreducible_quadratics() {
            // X^2 + 1 over F_3 (since -1 is a non-square), X^2 + 2 over F_5.
            assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
            assert_eq!(first_irreducible(5, 2), vec![2, 0, 1]);
            assert_eq!(first_irreducible(7, 2), vec![1, 0, 1]);
        }

        #[test]
        fn quartic_irreducibility_counts() {
            // Number of monic irreducible quartics over F_3 is (81 - 9)/4 = 18.
            let p = 3u64;
            let mut count = 0;
            for idx in 0..81u64 {
                let mut g: Vec<u64> = (0..4).map(|i| (idx / p.pow(i)) % p).collect();
                g.push(1);
                if is_irreducible(&g, p) {
                    count += 1;
                }
            }
            assert_eq!(count, 18);
        }
    }
}
