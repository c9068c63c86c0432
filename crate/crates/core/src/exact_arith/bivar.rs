//! Sparse polynomials in `(y, h)` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Parity of a polynomial under `y -> -y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// Floating evaluation mode. `Extended` converts the (finite) inputs to
/// exact rationals, evaluates without rounding and rounds once at the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Double,
    Extended,
}

/// Polynomial in `y` and `h`, stored as exponent pair `(deg_y, deg_h)` to
/// coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, deg_y: u32, deg_h: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_y, deg_h), c);
        }
        Self { terms }
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn h() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Sum of `c * y^a * h^b` over the given triples; repeated exponents add.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut out = BTreeMap::new();
        for (a, b, c) in terms {
            accumulate(&mut out, (a, b), c);
        }
        Self::from_map(out)
    }

    fn from_map(mut terms: BTreeMap<(u32, u32), Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(deg_y, deg_h)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, deg_y: u32, deg_h: u32) -> Rational {
        self.terms
            .get(&(deg_y, deg_h))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in `y`; `None` for the zero polynomial.
    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn deg_h(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Coefficient of `y^k`, as a polynomial in `h` alone.
    pub fn y_coeff(&self, k: u32) -> BivarPoly {
        Self::from_map(
            self.terms
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, b), c)| ((0, b), c.clone()))
                .collect(),
        )
    }

    pub fn leading_y_coeff(&self) -> BivarPoly {
        match self.deg_y() {
            Some(d) => self.y_coeff(d),
            None => BivarPoly::zero(),
        }
    }

    /// The rational value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiply by `y^a h^b`.
    pub fn shift_degrees(&self, a: u32, b: u32) -> BivarPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i + a, j + b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BivarPoly {
        let mut acc = BivarPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(-y, h)`.
    pub fn negate_y(&self) -> BivarPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), if a % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(y, -h)`.
    pub fn negate_h(&self) -> BivarPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), if b % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(y + h, h)`.
    pub fn shift_y_by_h(&self) -> BivarPoly {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            // (y + h)^a = sum_j C(a, j) y^j h^(a - j)
            for j in 0..=a {
                let coef = c * rational::binomial(a as u64, j as u64);
                accumulate(&mut out, (j, b + a - j), coef);
            }
        }
        Self::from_map(out)
    }

    /// Replace `h` by an exact value, leaving a polynomial in `y`.
    pub fn specialize_h(&self, h: &Rational) -> BivarPoly {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            accumulate(&mut out, (a, 0), c * rational::pow(h, b));
        }
        Self::from_map(out)
    }

    /// Dense ascending coefficients in `y` after setting `h` to a double.
    pub fn y_coeffs_f64(&self, h: f64) -> Vec<f64> {
        let n = self.deg_y().map_or(0, |d| d as usize + 1);
        let mut out = vec![0.0; n];
        for (&(a, b), c) in &self.terms {
            out[a as usize] += rational::to_f64(c) * h.powi(b as i32);
        }
        out
    }

    /// Exact quotient by `y`.
    pub fn div_y(&self) -> Result<BivarPoly> {
        self.div_monomial(1, 0)
    }

    /// Exact quotient by `h`.
    pub fn div_h(&self) -> Result<BivarPoly> {
        self.div_monomial(0, 1)
    }

    fn div_monomial(&self, a: u32, b: u32) -> Result<BivarPoly> {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if i < a || j < b {
                return Err(Error::InexactDivision {
                    index: 0,
                    reason: format!("term y^{i} h^{j} not divisible by y^{a} h^{b}"),
                });
            }
            terms.insert((i - a, j - b), c.clone());
        }
        Ok(Self { terms })
    }

    pub fn parity_y(&self) -> Parity {
        let mut has_even = false;
        let mut has_odd = false;
        for &(a, _) in self.terms.keys() {
            if a % 2 == 0 {
                has_even = true;
            } else {
                has_odd = true;
            }
        }
        match (has_even, has_odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Neither,
        }
    }

    /// True when every term has an even power of `h`.
    pub fn is_even_in_h(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b % 2 == 0)
    }

    /// Horner evaluation in any commutative ring that exact rationals map into.
    pub fn eval_with<T, F>(&self, y: T, h: T, conv: F) -> T
    where
        T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
        F: Fn(&Rational) -> T,
    {
        let Some(deg) = self.deg_y() else {
            return T::zero();
        };
        let max_h = self.deg_h().unwrap_or(0) as usize;
        let mut h_pows = Vec::with_capacity(max_h + 1);
        h_pows.push(T::one());
        for k in 1..=max_h {
            h_pows.push(h_pows[k - 1].clone() * h.clone());
        }
        let mut row = vec![T::zero(); deg as usize + 1];
        for (&(a, b), c) in &self.terms {
            let slot = &mut row[a as usize];
            *slot = slot.clone() + conv(c) * h_pows[b as usize].clone();
        }
        row.into_iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * y.clone() + c)
    }

    pub fn eval_f64(&self, y: f64, h: f64) -> f64 {
        self.eval_with(y, h, rational::to_f64)
    }

    pub fn eval_complex(&self, y: Complex64, h: f64) -> Complex64 {
        self.eval_with(y, Complex64::new(h, 0.0), |c| {
            Complex64::new(rational::to_f64(c), 0.0)
        })
    }

    pub fn eval_exact(&self, y: &Rational, h: &Rational) -> Rational {
        self.eval_with(y.clone(), h.clone(), Clone::clone)
    }

    /// Real evaluation in the requested precision.
    pub fn eval_real(&self, y: f64, h: f64, precision: Precision) -> Result<f64> {
        match precision {
            Precision::Double => Ok(self.eval_f64(y, h)),
            Precision::Extended => {
                let v = self.eval_exact(&rational::from_f64(y)?, &rational::from_f64(h)?);
                Ok(rational::to_f64(&v))
            }
        }
    }

    /// `sum |c| |y|^a |h|^b`, the scale of rounding error in a double evaluation.
    pub fn abs_scale(&self, y: f64, h: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                rational::to_f64(&c.abs()) * y.abs().powi(a as i32) * h.abs().powi(b as i32)
            })
            .sum()
    }

    /// d/dy.
    pub fn diff_y(&self) -> BivarPoly {
        Self::from_map(
            self.terms
                .iter()
                .filter(|(&(a, _), _)| a > 0)
                .map(|(&(a, b), c)| ((a - 1, b), c * rational::int(a as i64)))
                .collect(),
        )
    }
}

fn accumulate(map: &mut BTreeMap<(u32, u32), Rational>, key: (u32, u32), c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

impl From<Rational> for BivarPoly {
    fn from(c: Rational) -> Self {
        BivarPoly::constant(c)
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.terms.clone();
        for (&k, c) in &rhs.terms {
            accumulate(&mut out, k, c.clone());
        }
        BivarPoly { terms: out }
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.terms.clone();
        for (&k, c) in &rhs.terms {
            accumulate(&mut out, k, -c);
        }
        BivarPoly { terms: out }
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                accumulate(&mut out, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        BivarPoly { terms: out }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BivarPoly> for &BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly::one()
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, var: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "*{var}"),
        _ => write!(f, "*{var}^{e}"),
    }
}

/// Terms are printed from the highest `y` degree down, e.g. `4/3*y^3 + 2/3*y*h^2`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(x, _), (y, _)| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        for (&(a, b), c) in ordered {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if a == 0 && b == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag.is_one() {
                // drop the unit coefficient and the leading '*'
                let mut s = String::new();
                if a > 0 {
                    s.push('y');
                    if a > 1 {
                        s.push_str(&format!("^{a}"));
                    }
                }
                if b > 0 {
                    if !s.is_empty() {
                        s.push('*');
                    }
                    s.push('h');
                    if b > 1 {
                        s.push_str(&format!("^{b}"));
                    }
                }
                write!(f, "{s}")?;
            } else {
                write!(f, "{mag}")?;
                fmt_monomial(f, "y", a)?;
                fmt_monomial(f, "h", b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    fn g3() -> BivarPoly {
        // (2/3) y (2y^2 + h^2)
        BivarPoly::from_terms([(3, 0, rat(4, 3)), (1, 2, rat(2, 3))])
    }

    #[test]
    fn evaluates_example_member() {
        assert_eq!(g3().eval_f64(1.0, 1.0), 2.0);
        assert_eq!(BivarPoly::one().eval_f64(3.7, -2.0), 1.0);
        let z = g3().eval_complex(Complex64::new(0.0, 1.0), 1.0);
        assert!((z - Complex64::new(0.0, -2.0 / 3.0)).norm() < 1e-15);
        assert_eq!(g3().eval_exact(&int(1), &int(2)), int(4));
    }

    #[test]
    fn parity() {
        let two_y2 = BivarPoly::monomial(int(2), 2, 0);
        let two_y = BivarPoly::monomial(int(2), 1, 0);
        assert_eq!(two_y2.parity_y(), Parity::Even);
        assert_eq!(two_y.parity_y(), Parity::Odd);
        let mixed = &BivarPoly::monomial(int(1), 2, 0) + &BivarPoly::y();
        assert_eq!(mixed.parity_y(), Parity::Neither);
        assert_eq!(BivarPoly::zero().parity_y(), Parity::Even);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &g3() - &g3();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.deg_y(), None);
    }

    #[test]
    fn shift_and_divide() {
        // (y + h)^2 - y^2 = 2yh + h^2
        let y2 = BivarPoly::monomial(int(1), 2, 0);
        let d = &y2.shift_y_by_h() - &y2;
        assert_eq!(d, BivarPoly::from_terms([(1, 1, int(2)), (0, 2, int(1))]));
        assert_eq!(d.div_h().unwrap(), BivarPoly::from_terms([(1, 0, int(2)), (0, 1, int(1))]));
        assert!(BivarPoly::one().div_y().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(g3().to_string(), "4/3*y^3 + 2/3*y*h^2");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        let p = BivarPoly::from_terms([(2, 0, int(1)), (0, 2, rat(-1, 2))]);
        assert_eq!(p.to_string(), "y^2 - 1/2*h^2");
    }

    #[test]
    fn extended_precision_matches_double_on_benign_input() {
        let v = g3().eval_real(0.5, 0.25, Precision::Extended).unwrap();
        assert!((v - g3().eval_f64(0.5, 0.25)).abs() < 1e-15);
    }
}
