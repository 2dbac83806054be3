//! Arithmetic differential calculus on points of `GL_n`.
//!
//! * [`JetPoint`] — points `(a₀, a₁)` of the first jet group with its group
//!   law `∘`, inverse, the ghost map and the sections `∇¹` and `σ`.
//! * [`DeltaLieElement`] — elements of the order-`r` δ-Lie algebra with the
//!   group law `a +_{δ,r} b = a + b + p^r ab`, the adjoint action `⋆_δ`, the
//!   δ-bracket and the exponentials `ex^r`.
//! * [`SubgroupSpec`] — the classical subgroups (special linear, orthogonal
//!   and symplectic for a form `q`, torus, normalizer) with δ-Lie algebra
//!   membership tests and random members.
//! * [`cartan_decompose`] — the arithmetic Cartan decomposition
//!   `a = a⁺ +_δ a⁻` for a split form.

mod cartan;
mod jet;
mod lie;
mod subgroup;

pub use cartan::{cartan_decompose, tau_involution};
pub use jet::JetPoint;
pub use lie::DeltaLieElement;
pub use subgroup::{check_form, split_torus_element, Sign, SplitKind, SubgroupSpec};
