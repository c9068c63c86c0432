//! The weight `w_h(y) = y / sinh(pi y / h)` and its moments.
//!
//! Even moments have the closed form
//! `mu_{2m} = 4 (2m+1)! (1 - 2^-(2m+2)) zeta(2m+2) (h/pi)^(2m+2)`.
//! With `zeta(2k) = |B_{2k}| (2 pi)^{2k} / (2 (2k)!)` the powers of pi
//! cancel and `mu_{2m} = 2 |B_{2m+2}| (2^(2m+2) - 1) / (2m+2) * h^(2m+2)`,
//! an exact rational multiple of `h^(2m+2)`.

use std::f64::consts::PI;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::rational::{self, Rational};

pub(crate) fn require_positive_h(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("h must be positive and finite, got {h}")))
    }
}

/// `y / sinh(pi y / h)`, equal to `h / pi` at `y = 0`.
pub fn weight_eval(y: f64, h: f64) -> f64 {
    let a = PI / h;
    let t = a * y;
    if t == 0.0 {
        return h / PI;
    }
    if t.abs() > 700.0 {
        // sinh overflows; 2|y| e^{-|t|} is exact to double precision here
        return 2.0 * y.abs() * (-t.abs()).exp();
    }
    y / t.sinh()
}

/// Bernoulli numbers `B_0 ..= B_n` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(rational::int(1));
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += rational::binomial(m as u64 + 1, k as u64) * bk;
        }
        b.push(-acc / rational::int(m as i64 + 1));
    }
    b
}

/// Exact `c_k` with `mu_k(h) = c_k h^(k+2)`; zero for odd `k`.
pub fn weight_moment_coefficient(k: usize) -> Rational {
    if k % 2 == 1 {
        return Rational::zero();
    }
    let s = k + 2;
    let b = bernoulli_numbers(s).pop().expect("non-empty").abs();
    let two_s = rational::pow(&rational::int(2), s as u32);
    rational::int(2) * b * (two_s - rational::int(1)) / rational::int(s as i64)
}

/// `mu_k = integral of y^k w_h(y)` over the real line.
pub fn weight_moment(k: usize, h: f64) -> Result<f64> {
    require_positive_h(h)?;
    Ok(rational::to_f64(&weight_moment_coefficient(k)) * h.powi(k as i32 + 2))
}

/// Total mass `mu_0 = h^2 / 2`.
pub fn total_mass(h: f64) -> Result<f64> {
    weight_moment(0, h)
}
