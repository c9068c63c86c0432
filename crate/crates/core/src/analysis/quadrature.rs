//! Integration against `w_h` over the whole real line.
//!
//! The line is cut to `[-Y, Y]`, with `Y` chosen from a closed-form bound on
//! the discarded tails, and the finite interval is handled by tanh-sinh
//! quadrature with step halving until successive estimates agree.

use std::f64::consts::{FRAC_PI_2, PI};

use super::weight::{require_positive_h, weight_eval};
use crate::error::{Error, Result};

/// `|f(y)| <= scale * (1 + |y|)^degree` for all real `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthBound {
    pub scale: f64,
    pub degree: u32,
}

/// Something that can be integrated against the weight.
pub trait Integrand: Sync {
    fn eval(&self, y: f64) -> f64;
    fn growth(&self) -> GrowthBound;
}

/// `y^k`.
#[derive(Debug, Clone, Copy)]
pub struct Monomial(pub u32);

impl Integrand for Monomial {
    fn eval(&self, y: f64) -> f64 {
        y.powi(self.0 as i32)
    }
    fn growth(&self) -> GrowthBound {
        GrowthBound {
            scale: 1.0,
            degree: self.0,
        }
    }
}

/// Dense polynomial with ascending coefficients, Horner-evaluated.
#[derive(Debug, Clone)]
pub struct DensePoly(pub Vec<f64>);

impl DensePoly {
    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.0.is_empty() || other.0.is_empty() {
            return DensePoly(Vec::new());
        }
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly(out)
    }
}

impl Integrand for DensePoly {
    fn eval(&self, y: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * y + c)
    }
    fn growth(&self) -> GrowthBound {
        GrowthBound {
            scale: self.0.iter().map(|c| c.abs()).sum(),
            degree: self.0.len().saturating_sub(1) as u32,
        }
    }
}

/// Product of two integrands; the bound is the product of bounds.
pub struct Product<'a, A: Integrand, B: Integrand>(pub &'a A, pub &'a B);

impl<A: Integrand, B: Integrand> Integrand for Product<'_, A, B> {
    fn eval(&self, y: f64) -> f64 {
        self.0.eval(y) * self.1.eval(y)
    }
    fn growth(&self) -> GrowthBound {
        let (a, b) = (self.0.growth(), self.1.growth());
        GrowthBound {
            scale: a.scale * b.scale,
            degree: a.degree + b.degree,
        }
    }
}

/// A closure together with a caller-supplied growth bound.
pub struct Bounded<F> {
    pub f: F,
    pub bound: GrowthBound,
}

impl<F: Fn(f64) -> f64 + Sync> Integrand for Bounded<F> {
    fn eval(&self, y: f64) -> f64 {
        (self.f)(y)
    }
    fn growth(&self) -> GrowthBound {
        self.bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedIntegral {
    pub value: f64,
    /// difference between the last two refinement levels
    pub error_estimate: f64,
    /// upper bound on the two discarded tails
    pub tail_bound: f64,
    pub cutoff: f64,
    pub evaluations: usize,
}

const MAX_LEVEL: u32 = 14;
const T_MAX: f64 = 4.0;

/// Upper bound on `int_{|y| > Y} |f| w_h` for `|f| <= C (1 + |y|)^d`.
///
/// For `y >= Y`, `w_h(y) <= 2 (1 + y) e^{-a y} / (1 - e^{-2 a Y})` with
/// `a = pi / h`, and `int_Y^inf (1+y)^k e^{-a y} dy` is an incomplete gamma
/// value with the finite sum `e^{-aY} sum_j k!/(k-j)! (1+Y)^(k-j) / a^(j+1)`.
pub fn tail_bound(bound: GrowthBound, h: f64, cutoff: f64) -> f64 {
    let a = PI / h;
    let k = bound.degree + 1;
    let u = 1.0 + cutoff;
    let mut falling = 1.0;
    let mut sum = 0.0;
    for j in 0..=k {
        if j > 0 {
            falling *= (k - j + 1) as f64;
        }
        sum += falling * u.powi((k - j) as i32) / a.powi(j as i32 + 1);
    }
    let one_side = 2.0 * bound.scale * (-a * cutoff).exp() * sum / (1.0 - (-2.0 * a * cutoff).exp());
    2.0 * one_side
}

/// Smallest cutoff on a geometric grid whose tail bound is below `target`.
pub fn choose_cutoff(bound: GrowthBound, h: f64, target: f64) -> Result<f64> {
    let mut y = h;
    while y < 1e6 * h.max(1.0) {
        if tail_bound(bound, h, y) < target {
            return Ok(y);
        }
        y *= 1.1;
    }
    Err(Error::Domain(format!(
        "no cutoff found for tail target {target:e}"
    )))
}

/// `int_a^b f(x) dx` by tanh-sinh with step halving; returns value, last
/// level difference and evaluation count.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64, usize)> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let node = |t: f64| -> (f64, f64) {
        let s = FRAC_PI_2 * t.sinh();
        let x = s.tanh();
        let c = s.cosh();
        let w = FRAC_PI_2 * t.cosh() / (c * c);
        (x, w)
    };
    let mut evals = 0usize;
    let mut eval_at = |t: f64| -> f64 {
        let (x, w) = node(t);
        if w == 0.0 || !w.is_finite() {
            return 0.0;
        }
        evals += 1;
        w * f(mid + half * x)
    };

    let mut step = 1.0;
    let mut raw = eval_at(0.0);
    let mut k = 1;
    while k as f64 * step <= T_MAX {
        let t = k as f64 * step;
        raw += eval_at(t) + eval_at(-t);
        k += 1;
    }
    let mut estimate = raw * step * half;
    let mut error = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        step *= 0.5;
        let mut fresh = 0.0;
        let mut j = 1;
        while j as f64 * step <= T_MAX {
            let t = j as f64 * step;
            fresh += eval_at(t) + eval_at(-t);
            j += 2;
        }
        raw += fresh;
        let next = raw * step * half;
        error = (next - estimate).abs();
        estimate = next;
        if level >= 3 && error <= tol {
            return Ok((estimate, error, evals));
        }
    }
    Err(Error::NonConvergence {
        estimate,
        error,
        tol,
    })
}

/// Numeric value of `int f(y) w_h(y) dy` over the real line to absolute tolerance `tol`.
pub fn integrate_weighted_detailed<I: Integrand + ?Sized>(
    f: &I,
    h: f64,
    tol: f64,
) -> Result<WeightedIntegral> {
    require_positive_h(h)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    let bound = f.growth();
    let cutoff = choose_cutoff(bound, h, tol / 10.0)?;
    let tail = tail_bound(bound, h, cutoff);
    let (value, error_estimate, evaluations) =
        tanh_sinh(|y| f.eval(y) * weight_eval(y, h), -cutoff, cutoff, tol - tail)?;
    Ok(WeightedIntegral {
        value,
        error_estimate,
        tail_bound: tail,
        cutoff,
        evaluations,
    })
}

pub fn integrate_weighted<I: Integrand + ?Sized>(f: &I, h: f64, tol: f64) -> Result<f64> {
    integrate_weighted_detailed(f, h, tol).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tanh_sinh_on_smooth_integrands() {
        let (v, _, _) = tanh_sinh(|x| x * x, -1.0, 1.0, 1e-13).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-13);
        let (v, _, _) = tanh_sinh(|x| 1.0 / (1.0 + x * x), -5.0, 5.0, 1e-12).unwrap();
        assert!((v - 2.0 * 5f64.atan()).abs() < 1e-12);
    }

    #[test]
    fn mass_and_odd_integrands() {
        let v = integrate_weighted(&Monomial(0), 1.0, 1e-12).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
        let v = integrate_weighted(&Monomial(3), 1.0, 1e-12).unwrap();
        assert!(v.abs() < 1e-12);
        let v = integrate_weighted(&Monomial(2), 1.0, 1e-12).unwrap();
        assert!((v - 0.25).abs() < 1e-12);
    }

    #[test]
    fn tail_bound_dominates_actual_tail() {
        // actual tail of y^0 w_1 beyond Y, both sides
        let y0 = 3.0;
        let (actual, _, _) = tanh_sinh(|y| weight_eval(y, 1.0), y0, 60.0, 1e-15).unwrap();
        let bound = tail_bound(GrowthBound { scale: 1.0, degree: 0 }, 1.0, y0);
        assert!(bound >= 2.0 * actual);
        assert!(bound < 50.0 * actual);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(integrate_weighted(&Monomial(0), -1.0, 1e-8).is_err());
        assert!(integrate_weighted(&Monomial(0), 1.0, 0.0).is_err());
    }

    #[test]
    fn non_convergence_reports_estimate() {
        // a kink defeats tanh-sinh at an absurd tolerance
        match tanh_sinh(|x: f64| x.abs(), -1.0, 1.0, 1e-300) {
            Err(Error::NonConvergence { estimate, .. }) => assert!((estimate - 1.0).abs() < 1e-6),
            other => panic!("unexpected {other:?}"),
        }
    }
}
