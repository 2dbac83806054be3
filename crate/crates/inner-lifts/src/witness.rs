use padic_core::{Ctx, Error, PadicScalar, Result};

/// Evaluation of `(ad + bc)^{2p} − 2^{2p}(abcd)^p − (ad − bc)^{2p}` at a
/// point; `valuation` is `None` when the defect vanishes at the working
/// precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub defect: PadicScalar,
    pub valuation: Option<u32>,
}

impl WitnessReport {
    /// A finite valuation below the precision certifies that the identity
    /// fails at this point.
    pub fn is_witness(&self) -> bool {
        self.valuation.is_some()
    }
}

/// Evaluates the identity that a lift horizontal for the inner involution
/// attached to a `2×2` form would force, at the point `(a, b, c, d)`.
pub fn inner_obstruction_witness(ctx: &Ctx, point: [&PadicScalar; 4]) -> Result<WitnessReport> {
    let [a, b, c, d] = point;
    let (ad, bc) = (a * d, b * c);
    if !(&ad - &bc).is_unit() {
        return Err(Error::NotInvertible);
    }
    let p = ctx.p() as u128;
    let lhs = (&ad + &bc).pow(2 * p);
    let middle = &PadicScalar::from_i64(ctx, 2).pow(2 * p) * &(&ad * &bc).pow(p);
    let rhs = (&ad - &bc).pow(2 * p);
    let defect = &(&lhs - &middle) - &rhs;
    let valuation = (!defect.is_zero()).then(|| defect.valuation());
    Ok(WitnessReport { defect, valuation })
}
