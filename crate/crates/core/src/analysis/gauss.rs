use super::jacobi::{symmetrize, symmetrize_weights, JacobiMatrix};
use super::report::{Measured, ReportParams, VerificationReport};
use super::weight::weight_moment;
use crate::error::{Error, Result};

/// Gauss rule for `w_h`: positive weights, nodes ascending and symmetric about 0.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// `sum w_i f(x_i)`, accumulated over mirrored pairs `(x_i, x_{n-1-i})`
    /// so that odd integrands cancel exactly.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let n = self.nodes.len();
        let mut sum = 0.0;
        for i in 0..n / 2 {
            let j = n - 1 - i;
            sum += self.weights[i] * f(self.nodes[i]) + self.weights[j] * f(self.nodes[j]);
        }
        if n % 2 == 1 {
            sum += self.weights[n / 2] * f(self.nodes[n / 2]);
        }
        sum
    }
}

/// `n`-point Gauss rule: nodes are the Jacobi eigenvalues, weights
/// `mu0 * v_0^2` from the first eigenvector components.
pub fn gauss_rule(n: usize, h: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::InvalidArgument("gauss_rule needs n >= 1".into()));
    }
    let jac = JacobiMatrix::phi_monic(n, h)?;
    let eig = jac.eigenvalues_checked()?;
    let mut nodes = eig.values;
    let mut weights: Vec<f64> = eig
        .first_components
        .iter()
        .map(|v| jac.mu0 * v * v)
        .collect();
    symmetrize(&mut nodes);
    symmetrize_weights(&mut weights);
    if let Some(w) = weights.iter().find(|w| !(**w > 0.0)) {
        return Err(Error::Eigen(format!("non-positive Gauss weight {w}")));
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Compare the rule on `y^k`, `k = 0..=max_degree`, with the closed-form
/// moments: relative `tol` for even `k`, absolute for odd `k`.
pub fn moment_check(rule: &QuadratureRule, h: f64, max_degree: usize, tol: f64) -> Result<Vec<VerificationReport>> {
    let n = rule.nodes.len();
    (0..=max_degree)
        .map(|k| {
            let measured = rule.apply(|y| y.powi(k as i32));
            let exact = weight_moment(k, h)?;
            let abs_dev = (measured - exact).abs();
            let rel_dev = if exact == 0.0 { abs_dev } else { abs_dev / exact.abs() };
            let pass = if k % 2 == 1 { abs_dev <= tol } else { rel_dev <= tol };
            Ok(VerificationReport {
                identity: "gauss_moment".into(),
                params: ReportParams {
                    n: Some(n),
                    m: Some(k),
                    h: format!("{h}"),
                },
                measured: Measured::Number(measured),
                claimed_published: format!("{exact}"),
                claimed_derived: format!("{exact}"),
                abs_dev,
                rel_dev,
                tol,
                pass,
                published_match: None,
            })
        })
        .collect()
}
