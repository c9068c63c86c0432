//! Numerical analysis of the modified family: weight moments, zeros,
//! quadrature-based orthogonality checks and Gauss rules.
//!
//! Everything here requires `h > 0`. Negative `h` gives the same
//! polynomials, since every member is even in `h`.

mod gauss;
mod jacobi;
mod orthogonality;
pub mod quadrature;
mod report;
pub mod tridiag;
mod weight;
mod zeros;

pub use gauss::{gauss_rule, moment_check, QuadratureRule};
pub use jacobi::JacobiMatrix;
pub use orthogonality::{
    derived_norm, orthogonality_integrals, orthogonality_matrix, published_norm, ORTHOGONALITY_ID,
};
pub use quadrature::{integrate_weighted, integrate_weighted_detailed, Integrand};
pub use report::{Measured, ReportParams, VerificationReport};
pub use weight::{bernoulli_numbers, total_mass, weight_eval, weight_moment, weight_moment_coefficient};
pub use zeros::{g_zeros, g_zeros_with_residuals, phi_zeros, phi_zeros_with_residuals, ComplexZero, RealZero};
