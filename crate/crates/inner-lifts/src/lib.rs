//! Lifts of Frobenius on `GL_n` attached to inner automorphisms.
//!
//! * [`conjugation_lift_eval`] — the lift `Φ*` on regular matrices that is
//!   horizontal for the conjugation map `(t, x) ↦ x⁻¹tx`: for `m = x⁻¹tx`
//!   with `t` diagonal, `Φ*(m) = (x^{(p)})⁻¹ t^{(p)} x^{(p)}`.
//! * [`charpoly_lift_eval`] — the lift `Φ**(a) = a^{(p)}Λ(a)`, `Λ` diagonal
//!   and `≡ 1 (mod p)`, that sends each characteristic polynomial coefficient
//!   `P_i` to `P_i^p`; built digit by digit.
//! * [`isospectral_twist_eval`] — conjugates of `Φ**` by `1 + pα`.
//! * [`inner_obstruction_witness`] — evaluates the polynomial identity whose
//!   failure rules out a lift horizontal for an inner involution.

mod charpoly_lift;
mod conjugation;
mod witness;

pub use charpoly_lift::{
    charpoly_lift_eval, charpoly_lift_stages, d_star_star, isospectral_twist_eval, p_ij_matrix, CharPolyLift,
};
pub use conjugation::{conjugation_lift_eval, conjugation_lift_from_pair, RegularPoint};
pub use witness::{inner_obstruction_witness, WitnessReport};
