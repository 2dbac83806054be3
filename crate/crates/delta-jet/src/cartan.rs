use padic_core::{Error, Result};
use padic_linalg::{principal_root_matrix, PMatrix};

use crate::lie::DeltaLieElement;
use crate::subgroup::SubgroupSpec;

/// The involution induced on the δ-Lie algebra by `x ↦ q⁻¹(x^t)⁻¹q` for a
/// split form: `b ↦ −_δ(q⁻¹ b^t q)`.
pub fn tau_involution(q: &PMatrix, b: &DeltaLieElement) -> Result<DeltaLieElement> {
    let conj = &(&q.inverse()? * &b.mat.transpose()) * q;
    DeltaLieElement::new(conj, b.order)?.neg()
}

/// The arithmetic Cartan decomposition `a = a⁺ +_δ a⁻` for a split form `q`:
/// `a⁺` is fixed by [`tau_involution`] and `a⁻` is sent to `−_δ a⁻`.
///
/// With `A = 1 + pa` and `A^{−τ} = q⁻¹A^t q`, take the principal square root
/// `V = (A^{−τ}A)^{1/2}` and `U = AV⁻¹`; then `a⁺ = (U − 1)/p`,
/// `a⁻ = (V − 1)/p`.
pub fn cartan_decompose(
    spec: &SubgroupSpec,
    a: &DeltaLieElement,
) -> Result<(DeltaLieElement, DeltaLieElement)> {
    let q = match spec {
        SubgroupSpec::Orthogonal { q, split: Some(_), .. } => q,
        _ => return Err(Error::NotSplit),
    };
    if a.order != 1 {
        return Err(Error::OrderMismatch { left: a.order, right: 1 });
    }
    a.mat.check_compatible(q)?;
    let big_a = a.unit();
    let a_minus_tau = &(&q.inverse()? * &big_a.transpose()) * q;
    let v = principal_root_matrix(&(&a_minus_tau * &big_a), 2)?;
    let u = &big_a * &v.inverse()?;
    Ok((DeltaLieElement::from_unit(&u, 1)?, DeltaLieElement::from_unit(&v, 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::SplitKind;
    use padic_core::PadicContext;

    #[test]
    fn rejects_non_split() {
        let ctx = PadicContext::new(5, 1, 5).unwrap();
        let a = DeltaLieElement::zero(&PMatrix::identity(&ctx, 2), 1);
        assert_eq!(cartan_decompose(&SubgroupSpec::FullGL(2), &a).unwrap_err().kind(), "NotSplit");
    }

    #[test]
    fn small_example_round_trips() {
        let ctx = PadicContext::new(5, 1, 8).unwrap();
        let spec = SubgroupSpec::split(&ctx, SplitKind::OrthogonalEven, 2).unwrap();
        let a = DeltaLieElement::order_one(PMatrix::from_i64(&ctx, &[&[1, 2], &[3, 4]]));
        let (plus, minus) = cartan_decompose(&spec, &a).unwrap();
        assert!(plus.plus(&minus).unwrap().mat.agrees_to(&a.mat, 7));
    }
}
