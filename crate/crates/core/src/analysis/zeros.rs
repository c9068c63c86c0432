use num_complex::Complex64;
use num_traits::Signed;

use super::jacobi::{symmetrize, JacobiMatrix};
use crate::error::{Error, Result};
use crate::exact_arith::rational;
use crate::families::{g_by_recurrence, phi_monic_by_recurrence};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealZero {
    pub value: f64,
    /// `|p(z)|` with `p` evaluated exactly at the double `z`
    pub residual: f64,
    /// residual over `|p'(z)| max(1, |z|)`, i.e. relative distance to the true zero
    pub scaled_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexZero {
    pub value: Complex64,
    pub residual: f64,
    /// residual over `sum |c| |z|^a h^b`, the rounding scale of the evaluation
    pub scaled_residual: f64,
}

/// Zeros of the monic `hat phi_n^{(h)}`, ascending: eigenvalues of its
/// Jacobi matrix, symmetrized about 0.
pub fn phi_zeros(n: usize, h: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("phi_zeros needs n >= 1".into()));
    }
    let mut values = JacobiMatrix::phi_monic(n, h)?.eigenvalues_checked()?.values;
    symmetrize(&mut values);
    Ok(values)
}

/// [`phi_zeros`] together with exact-arithmetic residuals against the symbolic member.
pub fn phi_zeros_with_residuals(n: usize, h: f64) -> Result<Vec<RealZero>> {
    let zeros = phi_zeros(n, h)?;
    let member = phi_monic_by_recurrence(n).members.pop().expect("n >= 1");
    let deriv = member.diff_y();
    let hq = rational::from_f64(h)?;
    zeros
        .into_iter()
        .map(|z| {
            let zq = rational::from_f64(z)?;
            let r = rational::to_f64(&member.eval_exact(&zq, &hq).abs());
            let d = rational::to_f64(&deriv.eval_exact(&zq, &hq).abs());
            Ok(RealZero {
                value: z,
                residual: r,
                scaled_residual: if r == 0.0 { 0.0 } else { r / (d * z.abs().max(1.0)) },
            })
        })
        .collect()
}

/// Zeros of `g_n^{(h)}`: `0` together with `i r` for each zero `r` of
/// `phi_{n-1}`, from `g_n(i y) = i^n y phi_{n-1}(y)`. For even `n` the
/// origin appears twice. Sorted by imaginary part; real parts are exactly 0.
pub fn g_zeros(n: usize, h: f64) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("g_zeros needs n >= 1".into()));
    }
    let mut out = vec![Complex64::new(0.0, 0.0)];
    if n >= 2 {
        out.extend(phi_zeros(n - 1, h)?.into_iter().map(|r| Complex64::new(0.0, r)));
    }
    out.sort_by(|a, b| a.im.total_cmp(&b.im));
    Ok(out)
}

/// [`g_zeros`] with complex double-precision residuals.
pub fn g_zeros_with_residuals(n: usize, h: f64) -> Result<Vec<ComplexZero>> {
    let zeros = g_zeros(n, h)?;
    let member = g_by_recurrence(n).members.pop().expect("n >= 1");
    Ok(zeros
        .into_iter()
        .map(|z| {
            let r = member.eval_complex(z, h).norm();
            let scale = member.abs_scale(z.norm(), h);
            ComplexZero {
                value: z,
                residual: r,
                scaled_residual: if r == 0.0 { 0.0 } else { r / scale },
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_phi_zeros() {
        assert_eq!(phi_zeros(1, 1.0).unwrap(), vec![0.0]);
        let z = phi_zeros(3, 1.0).unwrap();
        let r2 = 2f64.sqrt();
        assert!((z[0] + r2).abs() < 1e-14 && z[1] == 0.0 && (z[2] - r2).abs() < 1e-14);
        for h in [0.5, 1.0, 3.0] {
            let z = phi_zeros(2, h).unwrap();
            assert!((z[1] - h / 2f64.sqrt()).abs() < 1e-14 * h);
            assert_eq!(z[0], -z[1]);
        }
        assert!(phi_zeros(0, 1.0).is_err());
    }

    #[test]
    fn small_g_zeros() {
        assert_eq!(g_zeros(1, 1.0).unwrap(), vec![Complex64::new(0.0, 0.0)]);
        let z = g_zeros(3, 1.0).unwrap();
        let s = 0.5f64.sqrt();
        assert_eq!(z.len(), 3);
        assert!((z[0].im + s).abs() < 1e-14 && z[1].im == 0.0 && (z[2].im - s).abs() < 1e-14);
        assert!(z.iter().all(|c| c.re == 0.0));
        // even index: double zero at the origin
        let z4 = g_zeros(4, 1.0).unwrap();
        assert_eq!(z4.iter().filter(|c| c.norm() == 0.0).count(), 2);
    }

    #[test]
    fn residuals_are_small() {
        for r in phi_zeros_with_residuals(9, 1.0).unwrap() {
            assert!(r.scaled_residual < 1e-12, "{r:?}");
        }
        for r in g_zeros_with_residuals(9, 1.0).unwrap() {
            assert!(r.scaled_residual < 1e-12, "{r:?}");
        }
    }
}
