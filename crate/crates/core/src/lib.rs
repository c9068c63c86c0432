//! Deformed Mittag-Leffler polynomials.
//!
//! The families `g_n^{(h)}`, their monic rescaling, the associated real
//! family `phi_n^{(h)}` and its monic rescaling are built exactly, with the
//! deformation parameter `h` kept symbolic, and cross-checked by several
//! independent constructions. The [`analysis`] module computes zeros,
//! moments of the weight `y / sinh(pi y / h)`, quadrature-based
//! orthogonality checks and Gauss rules.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod families;
pub mod powers_diff;
pub mod verify;

pub use error::{Error, Result};
pub use exact_arith::{BivarPoly, PowerSeries, Rational};
pub use families::{FamilyKind, FamilySequence};
