use super::tridiag::{ql_implicit, sturm_bisection, TridiagEigen};
use super::weight::{require_positive_h, total_mass};
use crate::error::{Error, Result};

/// Recurrence data of a monic orthogonal family:
/// `p_{k+1} = (y - alpha_k) p_k - beta_k p_{k-1}`, plus the total mass.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiMatrix {
    pub alpha: Vec<f64>,
    /// `beta[k-1]` is `beta_k` for `k = 1..n-1`
    pub beta: Vec<f64>,
    pub mu0: f64,
}

impl JacobiMatrix {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, mu0: f64) -> Result<Self> {
        if alpha.is_empty() || beta.len() + 1 != alpha.len() {
            return Err(Error::InvalidArgument(format!(
                "need n >= 1 diagonal entries and n-1 betas, got {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        if beta.iter().any(|&b| !(b > 0.0)) {
            return Err(Error::InvalidArgument("beta must be strictly positive".into()));
        }
        if !(mu0 > 0.0) {
            return Err(Error::InvalidArgument("mu0 must be positive".into()));
        }
        Ok(Self { alpha, beta, mu0 })
    }

    /// The `n x n` matrix of the monic modified family:
    /// `alpha_k = 0`, `beta_k = h^2 k (k+1) / 4`, `mu0 = h^2 / 2`.
    pub fn phi_monic(n: usize, h: f64) -> Result<Self> {
        require_positive_h(h)?;
        if n == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        let beta = (1..n).map(|k| h * h * (k * (k + 1)) as f64 / 4.0).collect();
        Self::new(vec![0.0; n], beta, total_mass(h)?)
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn off_diagonal(&self) -> Vec<f64> {
        self.beta.iter().map(|b| b.sqrt()).collect()
    }

    pub fn eigen(&self) -> Result<TridiagEigen> {
        ql_implicit(&self.alpha, &self.off_diagonal())
    }

    /// Eigenvalues by QL, confirmed against Sturm bisection.
    pub fn eigenvalues_checked(&self) -> Result<TridiagEigen> {
        let eig = self.eigen()?;
        let bis = sturm_bisection(&self.alpha, &self.off_diagonal());
        let scale = eig.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (k, (a, b)) in eig.values.iter().zip(&bis).enumerate() {
            if (a - b).abs() > 1e-10 * scale {
                return Err(Error::Eigen(format!(
                    "eigenvalue {k}: QL gives {a}, bisection gives {b}"
                )));
            }
        }
        Ok(eig)
    }

    /// `mu0 * beta_1 * ... * beta_n`, the squared norm of the degree-`n` monic member.
    pub fn norm_squared(&self, n: usize) -> f64 {
        self.mu0 * self.beta.iter().take(n).product::<f64>()
    }
}

/// Symmetrize an ascending spectrum of an even weight: `x_i = -x_{n-1-i}`
/// and an exact 0 in the middle for odd `n`.
pub(crate) fn symmetrize(values: &mut [f64]) {
    let n = values.len();
    for i in 0..n / 2 {
        let a = 0.5 * (values[n - 1 - i] - values[i]);
        values[i] = -a;
        values[n - 1 - i] = a;
    }
    if n % 2 == 1 {
        values[n / 2] = 0.0;
    }
}

pub(crate) fn symmetrize_weights(weights: &mut [f64]) {
    let n = weights.len();
    for i in 0..n / 2 {
        let a = 0.5 * (weights[i] + weights[n - 1 - i]);
        weights[i] = a;
        weights[n - 1 - i] = a;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_monic_entries() {
        let j = JacobiMatrix::phi_monic(4, 2.0).unwrap();
        assert_eq!(j.alpha, vec![0.0; 4]);
        assert_eq!(j.beta, vec![2.0, 6.0, 12.0]);
        assert_eq!(j.mu0, 2.0);
        assert_eq!(j.norm_squared(2), 24.0);
        assert!(JacobiMatrix::phi_monic(0, 1.0).is_err());
        assert!(JacobiMatrix::phi_monic(3, 0.0).is_err());
    }

    #[test]
    fn validation() {
        assert!(JacobiMatrix::new(vec![0.0, 0.0], vec![-1.0], 1.0).is_err());
        assert!(JacobiMatrix::new(vec![0.0], vec![], 0.0).is_err());
        assert!(JacobiMatrix::new(vec![0.0, 0.0], vec![], 1.0).is_err());
    }

    #[test]
    fn symmetrizing() {
        let mut v = [-1.0000001, 1e-17, 0.9999999];
        symmetrize(&mut v);
        assert_eq!(v, [-1.0, 0.0, 1.0]);
    }
}
