//! Exact scalars, bivariate polynomials in `(y, h)` and truncated power
//! series over them.

pub mod bivar;
pub mod rational;
pub mod series;

pub use bivar::{BivarPoly, Parity, Precision};
pub use rational::Rational;
pub use series::{Divisor, PowerSeries};
