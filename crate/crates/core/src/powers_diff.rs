//! Generalized integer powers, the h-difference operator and the deformed
//! exponential `e_h(x, y) = (1 + h x)^(y/h)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact_arith::rational::{self, Rational};
use crate::exact_arith::{BivarPoly, PowerSeries};

/// `Falling`: `z (z - h) ... (z - (n-1)h)`. `Rising`: `z (z + h) ... (z + (n-1)h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerVariant {
    Falling,
    Rising,
}

impl PowerVariant {
    fn step_sign(self) -> f64 {
        match self {
            PowerVariant::Falling => -1.0,
            PowerVariant::Rising => 1.0,
        }
    }
}

/// Which of the pair `e_h`, `e_{-h}` to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HSign {
    Plus,
    Minus,
}

pub fn generalized_power(z: f64, n: u32, h: f64, v: PowerVariant) -> f64 {
    let s = v.step_sign();
    (0..n).map(|k| z + s * k as f64 * h).product()
}

pub fn generalized_power_exact(z: &Rational, n: u32, h: &Rational, v: PowerVariant) -> Rational {
    let mut acc = rational::int(1);
    for k in 0..n {
        let step = h * rational::int(k as i64);
        acc *= match v {
            PowerVariant::Falling => z - step,
            PowerVariant::Rising => z + step,
        };
    }
    acc
}

/// `y^{(n,h)}` or `y^{[n,h]}` as an exact polynomial in `(y, h)`.
pub fn generalized_power_symbolic(n: u32, v: PowerVariant) -> BivarPoly {
    let sign = match v {
        PowerVariant::Falling => -1,
        PowerVariant::Rising => 1,
    };
    (0..n).fold(BivarPoly::one(), |acc, k| {
        let factor = BivarPoly::from_terms([(1, 0, rational::int(1)), (0, 1, rational::int(sign * k as i64))]);
        acc * factor
    })
}

/// `(p(y + h) - p(y)) / h`. The division is exact in the polynomial ring.
pub fn h_difference(p: &BivarPoly) -> BivarPoly {
    (&p.shift_y_by_h() - p)
        .div_h()
        .expect("p(y+h) - p(y) is always divisible by h")
}

/// A point at which to evaluate `e_h(x, y)`. Construction rejects `h == 0`
/// and the pole `x = -1/h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedExpPoint<X> {
    x: X,
    y: f64,
    h: f64,
}

impl DeformedExpPoint<f64> {
    pub fn new(x: f64, y: f64, h: f64) -> Result<Self> {
        if h == 0.0 {
            return Err(Error::Domain("deformation h must be nonzero".into()));
        }
        if 1.0 + h * x == 0.0 {
            return Err(Error::Domain(format!("pole of e_h at x = -1/h = {x}")));
        }
        Ok(Self { x, y, h })
    }

    /// Real-mode evaluation; rejects a non-positive base.
    pub fn eval(&self) -> Result<f64> {
        let base = 1.0 + self.h * self.x;
        if base <= 0.0 {
            return Err(Error::Domain(format!(
                "base 1 + h x = {base} is not positive in real mode"
            )));
        }
        Ok(((self.y / self.h) * base.ln()).exp())
    }
}

impl DeformedExpPoint<Complex64> {
    pub fn new_complex(x: Complex64, y: f64, h: f64) -> Result<Self> {
        if h == 0.0 {
            return Err(Error::Domain("deformation h must be nonzero".into()));
        }
        if (Complex64::new(1.0, 0.0) + x * h).norm() == 0.0 {
            return Err(Error::Domain(format!("pole of e_h at x = {x}")));
        }
        Ok(Self { x, y, h })
    }

    /// Principal branch of `exp((y/h) log(1 + h x))`.
    pub fn eval(&self) -> Complex64 {
        let base = Complex64::new(1.0, 0.0) + self.x * self.h;
        (base.ln() * (self.y / self.h)).exp()
    }
}

/// Real `e_h(x, y)`.
pub fn deformed_exp(x: f64, y: f64, h: f64) -> Result<f64> {
    DeformedExpPoint::new(x, y, h)?.eval()
}

/// Formal expansion of `e_h` (`Plus`) or `e_{-h}` (`Minus`): the `x^n`
/// coefficient is the falling (resp. rising) generalized power over `n!`.
/// No convergence region is imposed; the series is a formal object.
pub fn deformed_exp_series(order: usize, sign: HSign) -> PowerSeries {
    let v = match sign {
        HSign::Plus => PowerVariant::Falling,
        HSign::Minus => PowerVariant::Rising,
    };
    let mut pow = BivarPoly::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        if n > 0 {
            let k = (n - 1) as i64;
            let s = if v == PowerVariant::Falling { -k } else { k };
            pow = pow * BivarPoly::from_terms([(1, 0, rational::int(1)), (0, 1, rational::int(s))]);
        }
        coeffs.push(pow.scale(&(rational::int(1) / rational::factorial(n as u64))));
    }
    PowerSeries::new(order, coeffs)
}

/// Partial sum of the `e_h` expansion at a numeric point; requires `|h x| < 1`.
pub fn deformed_exp_partial_sum(x: f64, y: f64, h: f64, terms: usize) -> Result<f64> {
    if (h * x).abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "|h x| = {} outside the convergence disc",
            (h * x).abs()
        )));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..terms {
        term *= x * (y - (n as f64 - 1.0) * h) / n as f64;
        sum += term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;

    #[test]
    fn numeric_powers() {
        assert_eq!(generalized_power(3.3, 0, 2.0, PowerVariant::Falling), 1.0);
        assert_eq!(generalized_power(6.0, 3, 2.0, PowerVariant::Falling), 48.0);
        assert_eq!(generalized_power(1.0, 3, 1.0, PowerVariant::Rising), 6.0);
    }

    #[test]
    fn symbolic_powers() {
        assert_eq!(generalized_power_symbolic(0, PowerVariant::Rising), BivarPoly::one());
        let f2 = generalized_power_symbolic(2, PowerVariant::Falling);
        assert_eq!(f2, BivarPoly::from_terms([(2, 0, int(1)), (1, 1, int(-1))]));
        let r2 = generalized_power_symbolic(2, PowerVariant::Rising);
        assert_eq!(r2, BivarPoly::from_terms([(2, 0, int(1)), (1, 1, int(1))]));
    }

    #[test]
    fn difference_lowers_falling_power() {
        let p3 = generalized_power_symbolic(3, PowerVariant::Falling);
        let p2 = generalized_power_symbolic(2, PowerVariant::Falling);
        assert_eq!(h_difference(&p3), p2.scale(&int(3)));
        let y2 = BivarPoly::monomial(int(1), 2, 0);
        assert_eq!(h_difference(&y2), BivarPoly::from_terms([(1, 0, int(2)), (0, 1, int(1))]));
        assert!(h_difference(&BivarPoly::constant(int(7))).is_zero());
    }

    #[test]
    fn deformed_exp_values() {
        assert_eq!(deformed_exp(0.0, 1.7, 0.3).unwrap(), 1.0);
        assert!((deformed_exp(1.0, 2.0, 1.0).unwrap() - 4.0).abs() < 1e-14);
        assert!((deformed_exp(0.5, 3.0, -1.0).unwrap() - 8.0).abs() < 1e-13);
        // e_{-h}(x, y) = e_h(-x, -y)
        let a = deformed_exp(0.2, 1.3, -0.7).unwrap();
        let b = deformed_exp(-0.2, -1.3, 0.7).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn deformed_exp_domain_errors() {
        assert!(matches!(deformed_exp(-1.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(deformed_exp(-2.0, 0.5, 1.0), Err(Error::Domain(_))));
        assert!(matches!(deformed_exp(0.1, 0.5, 0.0), Err(Error::Domain(_))));
        let z = DeformedExpPoint::new_complex(Complex64::new(-2.0, 0.0), 2.0, 1.0)
            .unwrap()
            .eval();
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn series_first_terms() {
        let s = deformed_exp_series(1, HSign::Plus);
        assert_eq!(s.coeffs(), &[BivarPoly::one(), BivarPoly::y()]);
        let plus = deformed_exp_series(2, HSign::Plus);
        let minus = deformed_exp_series(2, HSign::Minus);
        let half = rational::rat(1, 2);
        assert_eq!(
            plus.coeff(2),
            &generalized_power_symbolic(2, PowerVariant::Falling).scale(&half)
        );
        assert_eq!(
            minus.coeff(2),
            &generalized_power_symbolic(2, PowerVariant::Rising).scale(&half)
        );
    }

    #[test]
    fn partial_sum_converges_to_closed_form() {
        let s = deformed_exp_partial_sum(0.3, 1.7, 0.5, 80).unwrap();
        assert!((s - deformed_exp(0.3, 1.7, 0.5).unwrap()).abs() < 1e-13);
        assert!(deformed_exp_partial_sum(2.0, 1.0, 0.5, 10).is_err());
    }
}
