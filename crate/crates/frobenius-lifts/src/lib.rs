//! Lifts of Frobenius on `GL_n` and the calculus they induce.
//!
//! A lift of Frobenius is an endomorphism `Φ` of the p-adic completion of
//! `GL_n` reducing to the entrywise p-power map mod `p`.  Pointwise it is
//! described by its Christoffel symbol `Δ`, with `Φ(x) = x^{(p)} + pΔ(x)`.
//!
//! * [`FrobeniusLift`] — the standard lift `x ↦ x^{(p)}`, the Chern lift
//!   attached to a form `q^t = ±q`, the special-linear lift, the hermitian
//!   lift on the centralizer `GL_r^c`, the two inner lifts, and twists.
//! * [`legendre_matrix`] — the value of the Chern lift at the identity.
//! * [`log_derivative`] and [`cocycle_defect`] — the arithmetic logarithmic
//!   derivative `lδ` and the obstruction to it being a cocycle.
//! * [`HermitianPoint`] — points `[[a, b], [−b, a]]` of `GL_r^c`.
//! * [`verify`] — horizontality, symmetry and prime-integral predicates.
//! * [`LiftDescriptor`] — the JSON description of a lift.

mod calculus;
mod descriptor;
mod hermitian;
mod legendre;
mod lift;
pub mod sample;
pub mod verify;

pub use calculus::{cocycle_defect, log_derivative, log_derivative_christoffel_form};
pub use descriptor::LiftDescriptor;
pub use hermitian::{centralizer_unit, hermitian_form, is_in_centralizer, HermitianPoint};
pub use legendre::legendre_matrix;
pub use lift::{chern_lambda, chern_lambda_newton, sl_lambda, FrobeniusLift};
