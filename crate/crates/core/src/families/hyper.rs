use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::rational::{self, Rational};

/// `g_n(y) = 2y h^(n-1) 2F1(1-n, 1-y/h; 2; 2)` as an exact terminating sum over
/// `k = 0..n-1`. Requires `n >= 1` and `h != 0`.
pub fn g_hypergeometric(n: usize, y: &Rational, h: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("hypergeometric form needs n >= 1".into()));
    }
    if h.is_zero() {
        return Err(Error::Domain("hypergeometric form divides by h; h must be nonzero".into()));
    }
    let a = rational::int(1 - n as i64);
    let b = rational::int(1) - y / h;
    let c = rational::int(2);
    let two = rational::int(2);

    // term_k = (a)_k (b)_k 2^k / ((c)_k k!), built incrementally
    let mut term = rational::int(1);
    let mut sum = term.clone();
    for k in 0..(n - 1) as i64 {
        let kk = rational::int(k);
        term = term * (&a + &kk) * (&b + &kk) * &two / ((&c + &kk) * rational::int(k + 1));
        sum += &term;
    }
    Ok(rational::int(2) * y * rational::pow(h, n as u32 - 1) * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    #[test]
    fn first_index_is_two_y() {
        assert_eq!(g_hypergeometric(1, &rat(7, 3), &rat(-5, 2)).unwrap(), rat(14, 3));
    }

    #[test]
    fn small_values() {
        assert_eq!(g_hypergeometric(2, &int(3), &int(1)).unwrap(), int(18));
        assert_eq!(g_hypergeometric(3, &int(1), &int(2)).unwrap(), int(4));
    }

    #[test]
    fn rejects_zero_h_and_zero_index() {
        assert!(matches!(g_hypergeometric(3, &int(1), &int(0)), Err(Error::Domain(_))));
        assert!(g_hypergeometric(0, &int(1), &int(1)).is_err());
    }
}
