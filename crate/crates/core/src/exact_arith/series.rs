//! Truncated formal power series in `x` with `BivarPoly` coefficients.
//!
//! The truncation order is part of the value: a series of order `N` knows
//! the coefficients of `x^0 ..= x^N` and nothing beyond. Binary operations
//! truncate to the smaller order of their operands.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::bivar::BivarPoly;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<BivarPoly>,
}

/// What [`PowerSeries::divide_exact`] divides by.
#[derive(Clone, Debug)]
pub enum Divisor {
    /// `x^k`
    XPow(usize),
    /// the variable `y`
    Y,
    /// a series whose constant coefficient is a nonzero rational
    Unit(PowerSeries),
}

impl PowerSeries {
    /// Build from coefficients, padding with zeros or dropping the excess so
    /// that exactly `order + 1` coefficients are kept.
    pub fn new(order: usize, mut coeffs: Vec<BivarPoly>) -> Self {
        coeffs.resize(order + 1, BivarPoly::zero());
        Self { order, coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> BivarPoly>(order: usize, f: F) -> Self {
        Self {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BivarPoly::one())
    }

    pub fn constant(order: usize, c: BivarPoly) -> Self {
        Self::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BivarPoly> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BivarPoly {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn map<F: FnMut(&BivarPoly) -> BivarPoly>(&self, f: F) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale_poly(&self, p: &BivarPoly) -> Self {
        self.map(|c| c * p)
    }

    /// `x * self`, known one order further.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(BivarPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self {
            order: self.order + 1,
            coeffs,
        }
    }

    /// d/dx, known one order less. Order-0 input gives the zero series of order 0.
    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order - 1, |n| {
            self.coeffs[n + 1].scale(&rational::int(n as i64 + 1))
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |n| {
            (0..=n).fold(BivarPoly::zero(), |acc, k| {
                let a = &self.coeffs[k];
                let b = &rhs.coeffs[n - k];
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a * b
                }
            })
        })
    }

    /// Formal exponential via `n E_n = sum_{k=1}^n k a_k E_{n-k}`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut e: Vec<BivarPoly> = Vec::with_capacity(self.order + 1);
        e.push(BivarPoly::one());
        for n in 1..=self.order {
            let mut acc = BivarPoly::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                acc = acc + (a * &e[n - k]).scale(&rational::int(k as i64));
            }
            e.push(acc.scale(&rational::rat(1, n as i64)));
        }
        Ok(Self {
            order: self.order,
            coeffs: e,
        })
    }

    /// Exact quotient. Dividing by `x^k` lowers the order by `k`.
    pub fn divide_exact(&self, divisor: &Divisor) -> Result<PowerSeries> {
        match divisor {
            Divisor::XPow(k) => {
                let k = *k;
                if k > self.order {
                    return Err(Error::InexactDivision {
                        index: self.order,
                        reason: format!("x^{k} exceeds the truncation order {}", self.order),
                    });
                }
                if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
                    return Err(Error::InexactDivision {
                        index: i,
                        reason: format!("nonzero coefficient below x^{k}"),
                    });
                }
                Ok(Self::new(self.order - k, self.coeffs[k..].to_vec()))
            }
            Divisor::Y => {
                let mut coeffs = Vec::with_capacity(self.order + 1);
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs.push(c.div_y().map_err(|_| Error::InexactDivision {
                        index: i,
                        reason: "coefficient not divisible by y".into(),
                    })?);
                }
                Ok(Self {
                    order: self.order,
                    coeffs,
                })
            }
            Divisor::Unit(d) => {
                let lead = d.coeffs[0].as_constant().filter(|c| !c.is_zero()).ok_or_else(|| {
                    Error::InexactDivision {
                        index: 0,
                        reason: "divisor constant term is not a nonzero rational".into(),
                    }
                })?;
                let inv = Rational::one() / lead;
                let order = self.order.min(d.order);
                let mut q: Vec<BivarPoly> = Vec::with_capacity(order + 1);
                for n in 0..=order {
                    let mut acc = self.coeffs[n].clone();
                    for k in 1..=n {
                        if !d.coeffs[k].is_zero() {
                            acc = acc - &d.coeffs[k] * &q[n - k];
                        }
                    }
                    q.push(acc.scale(&inv));
                }
                Ok(Self { order, coeffs: q })
            }
        }
    }

    /// Apply `f` to every coefficient; used for operators acting on `y`.
    pub fn try_map<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&BivarPoly) -> Result<BivarPoly>,
    {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

/// `(2y/h) * arctan(c*h*x)` truncated at `order`, written without any
/// division by `h`: `2y * sum_k (-1)^k c^(2k+1) h^(2k) x^(2k+1) / (2k+1)`.
pub fn scaled_arctan(order: usize, c: &Rational) -> PowerSeries {
    PowerSeries::from_fn(order, |n| {
        if n % 2 == 0 {
            return BivarPoly::zero();
        }
        let k = (n - 1) / 2;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coef = rational::pow(c, n as u32) * rational::rat(2 * sign, n as i64);
        BivarPoly::monomial(coef, 1, 2 * k as u32)
    })
}
