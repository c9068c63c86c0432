use super::{FamilyKind, FamilySequence, Provenance};
use crate::exact_arith::rational::{self, Rational};
use crate::exact_arith::BivarPoly;
use crate::powers_diff::{deformed_exp_series, generalized_power_symbolic, HSign, PowerVariant};

/// `(n+1) g_{n+1} = 2y g_n + h^2 (n-1) g_{n-1}` from `g_0 = 1`, `g_1 = 2y`.
///
/// The step is applied from `n = 1` on; there the `h^2` term vanishes and
/// it yields `g_2 = 2y^2`.
pub fn g_by_recurrence(n_max: usize) -> FamilySequence {
    let two_y = BivarPoly::monomial(rational::int(2), 1, 0);
    let mut members = vec![BivarPoly::one()];
    if n_max >= 1 {
        members.push(two_y.clone());
    }
    for n in 1..n_max {
        let h2 = BivarPoly::monomial(rational::int(n as i64 - 1), 0, 2);
        let next = &two_y * &members[n] + &h2 * &members[n - 1];
        members.push(next.scale(&rational::rat(1, n as i64 + 1)));
    }
    FamilySequence {
        kind: FamilyKind::G,
        members,
        provenance: Provenance::Recurrence,
    }
}

/// `hat g_{n+1} = y hat g_n + h^2 n(n-1)/4 hat g_{n-1}`, `hat g_0 = 1`, `hat g_1 = y`.
pub fn g_monic_by_recurrence(n_max: usize) -> FamilySequence {
    let mut members = vec![BivarPoly::one()];
    if n_max >= 1 {
        members.push(BivarPoly::y());
    }
    for n in 1..n_max {
        let c = rational::rat((n * (n - 1)) as i64, 4);
        let next = BivarPoly::y() * &members[n] + members[n - 1].shift_degrees(0, 2).scale(&c);
        members.push(next);
    }
    FamilySequence {
        kind: FamilyKind::GMonic,
        members,
        provenance: Provenance::Recurrence,
    }
}

/// `g_n = (1/n!) sum_m C(n, m) y^{(m,h)} y^{[n-m,h]}`.
pub fn g_by_convolution(n: usize) -> BivarPoly {
    let falling: Vec<_> = (0..=n as u32)
        .map(|m| generalized_power_symbolic(m, PowerVariant::Falling))
        .collect();
    let rising: Vec<_> = (0..=n as u32)
        .map(|m| generalized_power_symbolic(m, PowerVariant::Rising))
        .collect();
    let sum = (0..=n).fold(BivarPoly::zero(), |acc, m| {
        let c = rational::binomial(n as u64, m as u64);
        acc + (&falling[m] * &rising[n - m]).scale(&c)
    });
    sum.scale(&(Rational::from_integer(1.into()) / rational::factorial(n as u64)))
}

/// Coefficients of `e_h(x, y) e_{-h}(x, y)` as a truncated series product.
pub fn g_by_genfun(n_max: usize) -> FamilySequence {
    let prod = deformed_exp_series(n_max, HSign::Plus).mul(&deformed_exp_series(n_max, HSign::Minus));
    FamilySequence {
        kind: FamilyKind::G,
        members: prod.into_coeffs(),
        provenance: Provenance::Genfun,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    fn example_g() -> Vec<BivarPoly> {
        vec![
            BivarPoly::one(),
            BivarPoly::monomial(int(2), 1, 0),
            BivarPoly::monomial(int(2), 2, 0),
            // (2/3) y (2y^2 + h^2)
            BivarPoly::from_terms([(3, 0, rat(4, 3)), (1, 2, rat(2, 3))]),
            // (2/3) y^2 (y^2 + 2h^2)
            BivarPoly::from_terms([(4, 0, rat(2, 3)), (2, 2, rat(4, 3))]),
            // (2/15) y (2y^4 + 10 h^2 y^2 + 3 h^4)
            BivarPoly::from_terms([(5, 0, rat(4, 15)), (3, 2, rat(20, 15)), (1, 4, rat(6, 15))]),
        ]
    }

    #[test]
    fn recurrence_reproduces_first_members() {
        assert_eq!(g_by_recurrence(5).members, example_g());
        assert_eq!(g_by_recurrence(0).members, vec![BivarPoly::one()]);
    }

    #[test]
    fn convolution_small_cases() {
        assert_eq!(g_by_convolution(0), BivarPoly::one());
        assert_eq!(g_by_convolution(2), BivarPoly::monomial(int(2), 2, 0));
        assert_eq!(g_by_convolution(3), example_g()[3]);
    }

    #[test]
    fn genfun_coefficients() {
        let s = g_by_genfun(4);
        assert_eq!(s.members[0], BivarPoly::one());
        assert_eq!(s.members[1], BivarPoly::monomial(int(2), 1, 0));
        assert_eq!(s.members[4], example_g()[4]);
    }

    #[test]
    fn three_routes_agree() {
        let n = 12;
        let rec = g_by_recurrence(n);
        assert_eq!(rec.first_mismatch(&g_by_genfun(n)), None);
        for (k, p) in rec.members.iter().enumerate() {
            assert_eq!(&g_by_convolution(k), p, "n = {k}");
        }
        rec.check_invariants().unwrap();
    }

    #[test]
    fn monic_recurrence_matches_rescaling() {
        let monic = super::super::to_monic(&g_by_recurrence(10)).unwrap();
        assert_eq!(monic.members, g_monic_by_recurrence(10).members);
    }
}
