//! Random forms and structured points used to exercise the lifts.

use delta_jet::{split_torus_element, Sign, SplitKind, SubgroupSpec};
use padic_core::{sample as scalar_sample, Ctx, PadicScalar, Result};
use padic_linalg::{sample, PMatrix};
use rand::Rng;

use crate::hermitian::{hermitian_form, HermitianPoint};

/// A random invertible form with `q^t = sign·q`.  Antisymmetric forms need
/// even `n`.
pub fn form<R: Rng + ?Sized>(ctx: &Ctx, n: usize, sign: Sign, rng: &mut R) -> PMatrix {
    loop {
        let m = sample::matrix(ctx, n, rng);
        let q = match sign {
            Sign::Plus => &m + &m.transpose(),
            Sign::Minus => &m - &m.transpose(),
        };
        if q.is_invertible() {
            return q;
        }
    }
}

/// A random invertible hermitian form `[[q₁, q₂], [−q₂, q₁]]` with `q₁`
/// symmetric and `q₂` antisymmetric, of size `2r`.
pub fn hermitian<R: Rng + ?Sized>(ctx: &Ctx, r: usize, rng: &mut R) -> PMatrix {
    loop {
        let m1 = sample::matrix(ctx, r, rng);
        let m2 = sample::matrix(ctx, r, rng);
        let q = hermitian_form(&(&m1 + &m1.transpose()), &(&m2 - &m2.transpose())).expect("same shape");
        if q.is_invertible() {
            return q;
        }
    }
}

/// A random invertible point of `GL_r^c`.
pub fn hermitian_point<R: Rng + ?Sized>(ctx: &Ctx, r: usize, rng: &mut R) -> HermitianPoint {
    loop {
        let h = HermitianPoint { a: sample::matrix(ctx, r, rng), b: sample::matrix(ctx, r, rng) };
        if h.embed().is_invertible() {
            return h;
        }
    }
}

fn unit_matrix(ctx: &Ctx, n: usize, i: usize, j: usize) -> PMatrix {
    let mut m = PMatrix::zero(ctx, n);
    m.set(i, j, PadicScalar::one(ctx));
    m
}

/// Embeds an `m × m` block at offset `o` of the `n × n` identity.
fn embed_block(block: &PMatrix, n: usize, o: usize) -> PMatrix {
    let ctx = block.ctx();
    PMatrix::from_fn(ctx, n, |i, j| {
        if i >= o && j >= o {
            block.get(i - o, j - o).clone()
        } else if i == j {
            PadicScalar::one(ctx)
        } else {
            PadicScalar::zero(ctx)
        }
    })
}

/// `[[1, X], [0, 1]]` and its transpose-shaped companion `[[1, 0], [X, 1]]`
/// for an `r × r` block `X`.
fn unipotent_pair(x: &PMatrix) -> [PMatrix; 2] {
    let ctx = x.ctx();
    let r = x.n();
    let upper = PMatrix::from_fn(ctx, 2 * r, |i, j| {
        if i == j {
            PadicScalar::one(ctx)
        } else if i < r && j >= r {
            x.get(i, j - r).clone()
        } else {
            PadicScalar::zero(ctx)
        }
    });
    let lower = upper.transpose();
    [upper, lower]
}

/// Elements of the root subgroups of `SO(q)` for a split form, at parameter
/// `μ`, skipping the abnormal roots (the short roots of `SO_{2r+1}`).
///
/// For `Sp_{2r}`: `[[1, μF], [0, 1]]` with `F = e_ii` or `e_ij + e_ji`,
/// their transposes, and `diag(1 + μe_ij, 1 − μe_ji)`.  For `SO_{2r}`:
/// `[[1, μG], [0, 1]]` with `G = e_ij − e_ji`, transposes, and the same
/// diagonal blocks.  `SO_{2r+1}` uses the `SO_{2r}` elements in the lower
/// right block.
pub fn root_elements(ctx: &Ctx, kind: SplitKind, n: usize, mu: &PadicScalar) -> Vec<PMatrix> {
    let offset = usize::from(kind == SplitKind::OrthogonalOdd);
    let r = (n - offset) / 2;
    let one_r = PMatrix::identity(ctx, r);
    let mut blocks = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let eij = unit_matrix(ctx, r, i, j);
            let eji = unit_matrix(ctx, r, j, i);
            match kind {
                SplitKind::Symplectic if i <= j => {
                    let f = if i == j { eij.clone() } else { &eij + &eji };
                    blocks.extend(unipotent_pair(&f.scale(mu)));
                }
                SplitKind::OrthogonalEven | SplitKind::OrthogonalOdd if i < j => {
                    blocks.extend(unipotent_pair(&(&eij - &eji).scale(mu)));
                }
                _ => {}
            }
            if i != j {
                let a = &one_r + &eij.scale(mu);
                let d = &one_r - &eji.scale(mu);
                blocks.push(PMatrix::from_fn(ctx, 2 * r, |x, y| match (x < r, y < r) {
                    (true, true) => a.get(x, y).clone(),
                    (false, false) => d.get(x - r, y - r).clone(),
                    _ => PadicScalar::zero(ctx),
                }));
            }
        }
    }
    blocks.into_iter().map(|b| embed_block(&b, n, offset)).collect()
}

/// All signed permutation matrices in `SO(q)`: the Weyl-group
/// representatives of the normalizer of the split torus (n ≤ 4).
pub fn weyl_elements(ctx: &Ctx, kind: SplitKind, n: usize) -> Result<Vec<PMatrix>> {
    let spec = SubgroupSpec::split(ctx, kind, n)?;
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |sigma| {
        for signs in 0..(1u32 << n) {
            let m = PMatrix::from_fn(ctx, n, |i, j| {
                if sigma[i] == j {
                    PadicScalar::from_i64(ctx, if signs >> i & 1 == 1 { -1 } else { 1 })
                } else {
                    PadicScalar::zero(ctx)
                }
            });
            if spec.contains(&m) {
                out.push(m);
            }
        }
    });
    Ok(out)
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// A random element of `N_{SO(q)}`: split torus times a Weyl representative.
pub fn normalizer_element<R: Rng + ?Sized>(ctx: &Ctx, kind: SplitKind, n: usize, rng: &mut R) -> Result<PMatrix> {
    let weyl = weyl_elements(ctx, kind, n)?;
    let w = &weyl[rng.random_range(0..weyl.len())];
    Ok(&split_torus_element(ctx, kind, n, rng) * w)
}

/// A random point of `SO(q) ∩ φ₀⁻¹(SO(q))` for split `q`: a normalizer
/// element times, when available, a root-subgroup element.
pub fn fixed_locus_point<R: Rng + ?Sized>(ctx: &Ctx, kind: SplitKind, n: usize, rng: &mut R) -> Result<PMatrix> {
    let v = normalizer_element(ctx, kind, n, rng)?;
    let mu = scalar_sample::scalar(ctx, rng);
    let roots = root_elements(ctx, kind, n, &mu);
    if roots.is_empty() {
        return Ok(v);
    }
    Ok(&v * &roots[rng.random_range(0..roots.len())])
}
