use padic_core::{sample as scalar_sample, Ctx, Error, PadicScalar, Result};
use padic_linalg::{sample, PMatrix};
use rand::Rng;

use crate::lie::DeltaLieElement;

/// Symmetry type of a form: `q^t = q` or `q^t = −q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "symmetric" => Ok(Sign::Plus),
            "-" | "minus" | "antisymmetric" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("sign must be \"+\" or \"-\", got {other:?}"))),
        }
    }
}

/// The three split shapes of a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitKind {
    /// `[[0, 1_r], [−1_r, 0]]`, defining `Sp_{2r}`.
    Symplectic,
    /// `[[0, 1_r], [1_r, 0]]`, defining `SO_{2r}`.
    OrthogonalEven,
    /// `[[1, 0, 0], [0, 0, 1_r], [0, 1_r, 0]]`, defining `SO_{2r+1}`.
    OrthogonalOdd,
}

impl SplitKind {
    /// The split matrix of this shape in dimension `n`.
    pub fn matrix(self, ctx: &Ctx, n: usize) -> Result<PMatrix> {
        let (offset, r, sign) = match self {
            SplitKind::Symplectic | SplitKind::OrthogonalEven if n % 2 != 0 || n == 0 => {
                return Err(Error::DimensionMismatch(format!("{self:?} needs even n ≥ 2, got {n}")))
            }
            SplitKind::OrthogonalOdd if n % 2 != 1 || n < 3 => {
                return Err(Error::DimensionMismatch(format!("{self:?} needs odd n ≥ 3, got {n}")))
            }
            SplitKind::Symplectic => (0, n / 2, -1),
            SplitKind::OrthogonalEven => (0, n / 2, 1),
            SplitKind::OrthogonalOdd => (1, n / 2, 1),
        };
        Ok(PMatrix::from_fn(ctx, n, |i, j| {
            let v = if offset == 1 && i == 0 && j == 0 {
                1
            } else if i < offset || j < offset {
                0
            } else {
                let (i, j) = (i - offset, j - offset);
                if j == i + r {
                    1
                } else if i == j + r {
                    sign
                } else {
                    0
                }
            };
            PadicScalar::from_i64(ctx, v)
        }))
    }

    pub fn sign(self) -> Sign {
        match self {
            SplitKind::Symplectic => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    /// Recognizes a split matrix.
    pub fn detect(q: &PMatrix) -> Option<SplitKind> {
        [SplitKind::Symplectic, SplitKind::OrthogonalEven, SplitKind::OrthogonalOdd]
            .into_iter()
            .find(|k| k.matrix(q.ctx(), q.n()).map(|m| &m == q).unwrap_or(false))
    }
}

/// A subgroup of `GL_n` whose δ-Lie algebra we can test membership in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    FullGL(usize),
    SpecialLinear(usize),
    /// `SO(q) = {x : x^t q x = q}` for `q^t = ±q` (symplectic when `−`).
    Orthogonal { q: PMatrix, sign: Sign, split: Option<SplitKind> },
    /// Diagonal matrices.
    Torus(usize),
    /// Monomial matrices.
    Normalizer(usize),
}

/// Checks `q^t = sign·q` and that `q` is invertible.
pub fn check_form(q: &PMatrix, sign: Sign) -> Result<()> {
    let expected = match sign {
        Sign::Plus => q.clone(),
        Sign::Minus => -q,
    };
    if q.transpose() != expected {
        return Err(Error::SymmetryMismatch);
    }
    if !q.is_invertible() {
        return Err(Error::NotInvertible);
    }
    Ok(())
}

impl SubgroupSpec {
    /// `SO(q)` for a form with the declared symmetry.
    pub fn orthogonal(q: PMatrix, sign: Sign) -> Result<Self> {
        check_form(&q, sign)?;
        let split = SplitKind::detect(&q);
        Ok(SubgroupSpec::Orthogonal { q, sign, split })
    }

    /// `SO(q)` for the split form of the given shape.
    pub fn split(ctx: &Ctx, kind: SplitKind, n: usize) -> Result<Self> {
        let q = kind.matrix(ctx, n)?;
        Ok(SubgroupSpec::Orthogonal { q, sign: kind.sign(), split: Some(kind) })
    }

    pub fn n(&self) -> usize {
        match self {
            SubgroupSpec::FullGL(n)
            | SubgroupSpec::SpecialLinear(n)
            | SubgroupSpec::Torus(n)
            | SubgroupSpec::Normalizer(n) => *n,
            SubgroupSpec::Orthogonal { q, .. } => q.n(),
        }
    }

    /// Whether `x` is a point of the group (exactly, at the precision of `x`).
    pub fn contains(&self, x: &PMatrix) -> bool {
        if !x.is_invertible() {
            return false;
        }
        match self {
            SubgroupSpec::FullGL(_) => true,
            SubgroupSpec::SpecialLinear(_) => (&x.det() - &PadicScalar::one(x.ctx())).is_zero(),
            SubgroupSpec::Orthogonal { q, .. } => {
                (&(&x.transpose() * q) * x).agrees_to(q, x.prec()) && (&x.det() - &PadicScalar::one(x.ctx())).is_zero()
            }
            SubgroupSpec::Torus(_) => x.is_diagonal(),
            SubgroupSpec::Normalizer(_) => x.is_monomial(),
        }
    }

    /// Membership of `a` in the order-`r` δ-Lie algebra: the defining
    /// equations `f_i` of the group, with `φ^r` applied to their
    /// coefficients, vanish at `1 + p^r a` after division by `p^r`.
    pub fn delta_lie_contains(&self, a: &DeltaLieElement) -> bool {
        let r = a.order;
        let x = a.unit();
        let residual = match self {
            SubgroupSpec::FullGL(_) => return true,
            SubgroupSpec::Torus(_) | SubgroupSpec::Normalizer(_) => return a.mat.is_diagonal(),
            SubgroupSpec::SpecialLinear(_) => {
                let d = &x.det() - &PadicScalar::one(x.ctx());
                match d.div_p_exact(r) {
                    Ok(v) => v.is_zero(),
                    Err(_) => false,
                }
            }
            SubgroupSpec::Orthogonal { q, .. } => {
                let fq = q.frobenius(r as i64);
                match (&(&(&x.transpose() * &fq) * &x) - &fq).div_p_exact(r) {
                    Ok(v) => v.is_zero(),
                    Err(_) => false,
                }
            }
        };
        residual
    }

    /// A random element of the order-`r` δ-Lie algebra.
    ///
    /// For `SO(q)` this uses the Cayley transform: with `Q = φ^r(q)` and `S`
    /// random with `S^t = −sign·S`, `K = Q⁻¹S` is `Q`-skew and
    /// `g = (1 − p^r K)⁻¹(1 + p^r K)` is `Q`-orthogonal and `≡ 1 (mod p^r)`.
    pub fn random_delta_lie<R: Rng + ?Sized>(
        &self,
        ctx: &Ctx,
        order: u32,
        rng: &mut R,
    ) -> Result<DeltaLieElement> {
        let n = self.n();
        let one = PMatrix::identity(ctx, n);
        match self {
            SubgroupSpec::FullGL(_) => DeltaLieElement::new(sample::matrix(ctx, n, rng), order),
            SubgroupSpec::Torus(_) | SubgroupSpec::Normalizer(_) => {
                let d: Vec<PadicScalar> = (0..n).map(|_| scalar_sample::scalar(ctx, rng)).collect();
                DeltaLieElement::new(PMatrix::diag(&d), order)
            }
            SubgroupSpec::SpecialLinear(_) => {
                let b = &one + &sample::matrix(ctx, n, rng).mul_p_pow(order);
                let mut fix: Vec<PadicScalar> = vec![PadicScalar::one(ctx); n];
                fix[0] = b.det().inv()?;
                DeltaLieElement::from_unit(&(&b * &PMatrix::diag(&fix)), order)
            }
            SubgroupSpec::Orthogonal { q, sign, .. } => {
                let raw = sample::matrix(ctx, n, rng);
                let s = match sign {
                    Sign::Plus => &raw - &raw.transpose(),
                    Sign::Minus => &raw + &raw.transpose(),
                };
                let k = &q.frobenius(order as i64).inverse()? * &s;
                let pk = k.mul_p_pow(order);
                let g = &(&one - &pk).inverse()? * &(&one + &pk);
                DeltaLieElement::from_unit(&g, order)
            }
        }
    }

    /// A random point of the group, for the orthogonal and special linear
    /// cases built from a random δ-Lie element and a random element of the
    /// normalizer of the split torus where available.
    pub fn random_member<R: Rng + ?Sized>(&self, ctx: &Ctx, rng: &mut R) -> Result<PMatrix> {
        let n = self.n();
        match self {
            SubgroupSpec::FullGL(_) => Ok(sample::invertible(ctx, n, rng)),
            SubgroupSpec::Torus(_) => {
                let d: Vec<PadicScalar> = (0..n).map(|_| scalar_sample::unit(ctx, rng)).collect();
                Ok(PMatrix::diag(&d))
            }
            SubgroupSpec::Normalizer(_) => Ok(sample::monomial(ctx, n, rng)),
            SubgroupSpec::SpecialLinear(_) => {
                let b = sample::invertible(ctx, n, rng);
                let mut fix: Vec<PadicScalar> = vec![PadicScalar::one(ctx); n];
                fix[0] = b.det().inv()?;
                Ok(&b * &PMatrix::diag(&fix))
            }
            SubgroupSpec::Orthogonal { q, split, .. } => {
                let g = self.random_delta_lie(ctx, 1, rng)?.unit();
                // g is φ(q)-orthogonal; for split q, φ(q) = q, and a random
                // torus element widens the sample beyond the congruence subgroup.
                match split {
                    Some(kind) => Ok(&split_torus_element(ctx, *kind, n, rng) * &g),
                    None if q.frobenius(1) == *q => Ok(g),
                    None => Err(Error::NotSplit),
                }
            }
        }
    }
}

/// A random element of the split maximal torus of `SO(q)`:
/// `diag(d, d⁻¹)` or `diag(1, d, d⁻¹)`.
pub fn split_torus_element<R: Rng + ?Sized>(ctx: &Ctx, kind: SplitKind, n: usize, rng: &mut R) -> PMatrix {
    let r = n / 2;
    let offset = usize::from(kind == SplitKind::OrthogonalOdd);
    let d: Vec<PadicScalar> = (0..r).map(|_| scalar_sample::unit(ctx, rng)).collect();
    let mut diag = vec![PadicScalar::one(ctx); n];
    for i in 0..r {
        diag[offset + i] = d[i].clone();
        diag[offset + r + i] = d[i].inv().expect("sampled a unit");
    }
    PMatrix::diag(&diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_core::PadicContext;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_shapes() {
        let ctx = PadicContext::new(5, 1, 4).unwrap();
        let sp = SplitKind::Symplectic.matrix(&ctx, 2).unwrap();
        assert_eq!(sp, PMatrix::from_i64(&ctx, &[&[0, 1], &[-1, 0]]));
        let so3 = SplitKind::OrthogonalOdd.matrix(&ctx, 3).unwrap();
        assert_eq!(so3, PMatrix::from_i64(&ctx, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        assert_eq!(SplitKind::detect(&so3), Some(SplitKind::OrthogonalOdd));
        assert!(SplitKind::OrthogonalEven.matrix(&ctx, 3).is_err());
        assert_eq!(
            SubgroupSpec::orthogonal(sp.clone(), Sign::Plus).unwrap_err().kind(),
            "SymmetryMismatch"
        );
    }

    #[test]
    fn sl2_membership_example() {
        // tr(a) + p·det(a) = 0 for a = diag(1, −(1+p)⁻¹)
        let ctx = PadicContext::new(5, 1, 6).unwrap();
        let d = PadicScalar::from_i64(&ctx, 6).inv().unwrap();
        let a = DeltaLieElement::order_one(PMatrix::diag(&[PadicScalar::one(&ctx), -d]));
        assert!(SubgroupSpec::SpecialLinear(2).delta_lie_contains(&a));
        let b = DeltaLieElement::order_one(PMatrix::from_i64(&ctx, &[&[1, 0], &[0, -1]]));
        assert!(!SubgroupSpec::SpecialLinear(2).delta_lie_contains(&b));
    }

    #[test]
    fn zero_is_always_a_member() {
        let ctx = PadicContext::new(3, 2, 6).unwrap();
        let z = DeltaLieElement::zero(&PMatrix::identity(&ctx, 2), 1);
        for s in [
            SubgroupSpec::FullGL(2),
            SubgroupSpec::SpecialLinear(2),
            SubgroupSpec::split(&ctx, SplitKind::Symplectic, 2).unwrap(),
            SubgroupSpec::Torus(2),
        ] {
            assert!(s.delta_lie_contains(&z));
        }
    }

    #[test]
    fn random_members_are_members() {
        let ctx = PadicContext::new(5, 2, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = PMatrix::from_i64(&ctx, &[&[2, 1, 0], &[1, 4, 0], &[0, 0, 1]]);
        let specs = [
            SubgroupSpec::SpecialLinear(3),
            SubgroupSpec::orthogonal(q, Sign::Plus).unwrap(),
            SubgroupSpec::split(&ctx, SplitKind::OrthogonalOdd, 3).unwrap(),
        ];
        for s in &specs {
            for order in 1..=2 {
                let a = s.random_delta_lie(&ctx, order, &mut rng).unwrap();
                assert!(s.delta_lie_contains(&a), "{s:?} order {order}");
            }
        }
        let sp = SubgroupSpec::split(&ctx, SplitKind::Symplectic, 4).unwrap();
        for _ in 0..5 {
            let g = sp.random_member(&ctx, &mut rng).unwrap();
            assert!(sp.contains(&g));
        }
    }
}
