//! Symmetric tridiagonal eigenproblems: implicit-shift QL with tracking of
//! the first eigenvector components, and Sturm-sequence bisection.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues and first eigenvector components, ascending by eigenvalue.
#[derive(Debug, Clone)]
pub struct TridiagEigen {
    pub values: Vec<f64>,
    /// first component of each unit eigenvector
    pub first_components: Vec<f64>,
}

/// Implicit QL on diagonal `diag` and off-diagonal `off` (`off.len() == diag.len() - 1`).
pub fn ql_implicit(diag: &[f64], off: &[f64]) -> Result<TridiagEigen> {
    let n = diag.len();
    if n == 0 {
        return Ok(TridiagEigen {
            values: Vec::new(),
            first_components: Vec::new(),
        });
    }
    if off.len() + 1 != n {
        return Err(Error::InvalidArgument(format!(
            "off-diagonal has length {} for dimension {n}",
            off.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    // first row of the accumulated rotation matrix
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::Eigen(format!(
                    "QL did not converge for eigenvalue {l} after {MAX_SWEEPS} sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok(TridiagEigen {
        values: order.iter().map(|&i| d[i]).collect(),
        first_components: order.iter().map(|&i| z[i]).collect(),
    })
}

/// Number of eigenvalues strictly below `lambda`, from the signs of the
/// LDL^T pivots of `T - lambda I`.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let b2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - lambda - if i == 0 { 0.0 } else { b2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + lambda.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues by bisection on the Gershgorin interval, ascending.
pub fn sturm_bisection(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let radius = |i: usize| {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        left + right
    };
    let lo0 = (0..n).map(|i| diag[i] - radius(i)).fold(f64::INFINITY, f64::min);
    let hi0 = (0..n).map(|i| diag[i] + radius(i)).fold(f64::NEG_INFINITY, f64::max);
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_count(diag, off, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let eig = ql_implicit(&[0.0, 0.0], &[1.0]).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-15);
        assert!((eig.values[1] - 1.0).abs() < 1e-15);
        for c in &eig.first_components {
            assert!((c * c - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn second_difference_matrix() {
        // eigenvalues of tridiag(-1, 2, -1): 2 - 2 cos(k pi / (n+1))
        let n = 9;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let eig = ql_implicit(&diag, &off).unwrap();
        let bis = sturm_bisection(&diag, &off);
        for k in 0..n {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((eig.values[k] - want).abs() < 1e-13);
            assert!((bis[k] - want).abs() < 1e-13);
        }
        let total: f64 = eig.first_components.iter().map(|c| c * c).sum();
        assert!((total - 1.0).abs() < 1e-13);
    }

    #[test]
    fn sturm_counts() {
        let diag = [1.0, 2.0, 3.0];
        let off = [0.0, 0.0];
        assert_eq!(sturm_count(&diag, &off, 0.5), 0);
        assert_eq!(sturm_count(&diag, &off, 2.5), 2);
        assert_eq!(sturm_count(&diag, &off, 10.0), 3);
    }

    #[test]
    fn trivial_sizes() {
        assert!(ql_implicit(&[], &[]).unwrap().values.is_empty());
        let one = ql_implicit(&[4.0], &[]).unwrap();
        assert_eq!(one.values, vec![4.0]);
        assert_eq!(one.first_components, vec![1.0]);
        assert!(ql_implicit(&[1.0, 2.0], &[]).is_err());
    }
}
