//! Solutions of δ-linear equations on `GL_n`.
//!
//! For a lift of Frobenius `Φ` and an order-one δ-Lie element `α`, the
//! equation `lδu = α` is equivalent to `δu = Δ^α(u)` and to
//! `φ(u) = Φ^α(u) = (1 + pα)Φ(u)`.  Since `Φ^α(u + p^k h) ≡ Φ^α(u)
//! (mod p^{k+1})`, each new digit `h` of a solution satisfies
//! `φ(h) ≡ c (mod p)` for a residue `c` computed from the previous digits,
//! and is recovered with the inverse residue Frobenius.  Every invertible
//! residue matrix is therefore the reduction of exactly one solution.
//!
//! For the inner lifts (conjugation and characteristic-polynomial lifts) the
//! twist is by conjugation, `Φ^α(u) = εΦ(u)ε⁻¹`, which keeps the
//! characteristic polynomial coefficients as prime integrals.

mod audit;
mod problem;
mod solve;

pub use audit::{audit_prime_integrals, AuditEntry, AuditReport};
pub use problem::{DeltaLinearProblem, EquationForms, ProblemJson};
pub use solve::{enumerate_residue_seeds, solve, SolutionSet};
