//! Truncated arithmetic in the unramified ring `W(F_{p^f}) / p^N`.
//!
//! Elements are stored as coefficient vectors over the power basis
//! `1, X, …, X^{f-1}` of `(Z/p^N)[X] / (g)`, where `g` is a monic polynomial
//! that is irreducible mod `p`.  Every value carries its known absolute
//! precision `k ≤ N`, and operations propagate precision the way exact
//! p-adic arithmetic does: ring operations take the minimum of the operand
//! precisions, exact division by `p` consumes one digit, and multiplication
//! by `p` (or raising to the `p`-th power) gains one.
//!
//! The Frobenius automorphism `φ` is the unique ring automorphism lifting
//! `x ↦ x^p` on the residue field; it is made exact by Hensel-lifting the
//! root of `g` congruent to `X^p`.  From it we get the p-derivation
//! `δ(x) = (φ(x) − x^p)/p` and, for 1-units, principal `ν`-th roots by the
//! binomial series.

mod context;
mod error;
pub mod json;
mod poly;
pub mod sample;
mod scalar;
mod series;

pub use context::{Ctx, PadicContext};
pub use error::{Error, Result};
pub use poly::{eval_poly, newton_root};
pub use scalar::PadicScalar;
pub use series::{binomial_root_terms, RootTerm};
