use padic_core::{eval_poly, newton_root, Error, PadicScalar, Result};

use crate::charpoly::{adjugate, char_poly};
use crate::matrix::PMatrix;

/// The residue classes of the simple roots of a monic polynomial (given
/// leading coefficient first) in the residue field, sorted
/// lexicographically by their coordinates, each returned as a scalar of
/// precision 1.
pub fn residue_roots(monic: &[PadicScalar]) -> Result<Vec<PadicScalar>> {
    let ctx = monic[0].ctx().clone();
    let coeffs: Vec<PadicScalar> = monic.iter().rev().map(|c| c.with_prec(1)).collect();
    let mut roots = Vec::new();
    for r in PadicScalar::residue_field(&ctx)? {
        let x = PadicScalar::from_residues(&ctx, &r, 1);
        if eval_poly(&coeffs, &x).is_zero() {
            roots.push(x);
        }
    }
    roots.sort_by(|a, b| a.residue().cmp(&b.residue()));
    Ok(roots)
}

/// Eigendecomposition of a regular matrix whose characteristic polynomial
/// splits over the residue field: returns `(t, x)` with `t` diagonal,
/// `x·m = t·x` (so `x⁻¹ t x = m`), the eigenvalues sorted by residue.
///
/// Eigenvalues are Hensel lifts of the simple residue roots.  The rows of
/// `x` are left eigenvectors read off from the adjugate of `t_i − m`, which
/// has rank one and annihilates `t_i − m` exactly; each row is normalized so
/// its first unit entry is `1`.
pub fn hensel_eigen(m: &PMatrix) -> Result<(PMatrix, PMatrix)> {
    let ctx = m.ctx();
    let n = m.n();
    let cp = char_poly(m);
    if !cp.is_regular() {
        return Err(Error::NotRegular);
    }
    let monic = cp.monic_coeffs();
    let roots = residue_roots(&monic)?;
    if roots.len() < n {
        return Err(Error::CharPolyDoesNotSplit);
    }
    let constant_first: Vec<PadicScalar> = monic.iter().rev().cloned().collect();
    let mut eigenvalues = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n * n);
    for r in &roots {
        let t = newton_root(&constant_first, r)?;
        let adj = adjugate(&(&PMatrix::scalar(&t, n) - m));
        let row = (0..n)
            .find(|&i| (0..n).any(|j| adj.get(i, j).is_unit()))
            .ok_or(Error::NotRegular)?;
        let lead = (0..n).find(|&j| adj.get(row, j).is_unit()).expect("row has a unit entry");
        let scale = adj.get(row, lead).inv()?;
        rows.extend((0..n).map(|j| adj.get(row, j) * &scale));
        eigenvalues.push(t);
    }
    let x = PMatrix::new(ctx, n, rows)?;
    Ok((PMatrix::diag(&eigenvalues), x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;

    #[test]
    fn diagonal_input_is_fixed() {
        let ctx = PadicContext::new(7, 1, 5).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[1, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let (t, x) = hensel_eigen(&m).unwrap();
        assert_eq!(t, m);
        assert_eq!(x, PMatrix::identity(&ctx, 3));
    }

    #[test]
    fn square_roots_of_six() {
        let ctx = PadicContext::new(5, 1, 8).unwrap();
        let m = PMatrix::from_i64(&ctx, &[&[0, 1], &[6, 0]]);
        let (t, x) = hensel_eigen(&m).unwrap();
        let six = PadicScalar::from_i64(&ctx, 6);
        let t1 = t.get(0, 0);
        let t2 = t.get(1, 1);
        assert_eq!(t1.residue(), vec![1]);
        assert_eq!(t2.residue(), vec![4]);
        assert_eq!(&(t1 * t1), &six);
        assert_eq!(&(t2 * t2), &six);
        assert_eq!(&x.inverse().unwrap() * &(&t * &x), m);
    }

    #[test]
    fn errors() {
        let ctx = PadicContext::new(3, 1, 5).unwrap();
        let scalar = PMatrix::identity(&ctx, 2);
        assert_eq!(hensel_eigen(&scalar).unwrap_err().kind(), "NotRegular");
        // s² + 1 is irreducible over F_3
        let rot = PMatrix::from_i64(&ctx, &[&[0, -1], &[1, 0]]);
        assert_eq!(hensel_eigen(&rot).unwrap_err().kind(), "CharPolyDoesNotSplit");
        let ctx2 = PadicContext::new(3, 2, 5).unwrap();
        let rot2 = PMatrix::from_i64(&ctx2, &[&[0, -1], &[1, 0]]);
        let (t, x) = hensel_eigen(&rot2).unwrap();
        assert_eq!(&x.inverse().unwrap() * &(&t * &x), rot2);
    }
}
