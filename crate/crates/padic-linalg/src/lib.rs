//! Square matrices over `W(F_{p^f}) / p^N`.
//!
//! [`PMatrix`] is a dense row-major matrix of [`PadicScalar`] entries.  On
//! top of ring arithmetic it provides the entrywise maps that drive the
//! arithmetic differential calculus (`a^{(p)}`, `φ(a)`, `δa`), division-free
//! characteristic polynomials and discriminants, principal `ν`-th roots of
//! matrices `≡ 1 (mod p)`, and Hensel eigendecomposition of regular matrices.
//!
//! [`PadicScalar`]: padic_core::PadicScalar

mod charpoly;
mod eigen;
pub mod json;
mod matrix;
mod root;
pub mod sample;

pub use charpoly::{adjugate, berkowitz, char_poly, discriminant, CharPolyData};
pub use eigen::{hensel_eigen, residue_roots};
pub use matrix::PMatrix;
pub use root::{principal_root_matrix, root_by_newton};
