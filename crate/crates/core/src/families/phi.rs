use super::{FamilyKind, FamilySequence, Provenance};
use crate::error::{Error, Result};
use crate::exact_arith::rational;
use crate::exact_arith::series::scaled_arctan;
use crate::exact_arith::{BivarPoly, Divisor, PowerSeries};

/// `(n+2) phi_{n+1} = 2y phi_n - h^2 n phi_{n-1}`, `phi_0 = 2`, `phi_1 = 2y`.
pub fn phi_by_recurrence(n_max: usize) -> FamilySequence {
    let two_y = BivarPoly::monomial(rational::int(2), 1, 0);
    let mut members = vec![BivarPoly::constant(rational::int(2))];
    if n_max >= 1 {
        members.push(two_y.clone());
    }
    for n in 1..n_max {
        let next = &two_y * &members[n]
            - members[n - 1].shift_degrees(0, 2).scale(&rational::int(n as i64));
        members.push(next.scale(&rational::rat(1, n as i64 + 2)));
    }
    FamilySequence {
        kind: FamilyKind::Phi,
        members,
        provenance: Provenance::Recurrence,
    }
}

/// `hat phi_{n+1} = y hat phi_n - (h^2/4) n(n+1) hat phi_{n-1}`, `hat phi_0 = 1`, `hat phi_1 = y`.
pub fn phi_monic_by_recurrence(n_max: usize) -> FamilySequence {
    let mut members = vec![BivarPoly::one()];
    if n_max >= 1 {
        members.push(BivarPoly::y());
    }
    for n in 1..n_max {
        let c = rational::rat((n * (n + 1)) as i64, 4);
        let next = BivarPoly::y() * &members[n] - members[n - 1].shift_degrees(0, 2).scale(&c);
        members.push(next);
    }
    FamilySequence {
        kind: FamilyKind::PhiMonic,
        members,
        provenance: Provenance::Recurrence,
    }
}

/// `phi_n(y) = g_{n+1}(i y) / (i^{n+1} y)`, computed exactly.
///
/// The term `c y^a h^b` of `g_{n+1}` picks up `i^(a - n - 1)`; powers of `i`
/// are tracked on the 4-cycle so real and imaginary parts stay rational.
pub fn phi_from_g(g_seq: &FamilySequence, n: usize) -> Result<BivarPoly> {
    if g_seq.kind != FamilyKind::G {
        return Err(Error::InvalidArgument(format!(
            "phi_from_g expects the g family, got {}",
            g_seq.kind
        )));
    }
    let g = g_seq.members.get(n + 1).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "g sequence stops at {} but index {} is needed",
            g_seq.n_max(),
            n + 1
        ))
    })?;
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (a, b, c) in g.terms() {
        let e = (a as i64 - n as i64 - 1).rem_euclid(4);
        match e {
            0 => re.push((a, b, c.clone())),
            1 => im.push((a, b, c.clone())),
            2 => re.push((a, b, -c)),
            _ => im.push((a, b, -c)),
        }
    }
    let im = BivarPoly::from_terms(im);
    if !im.is_zero() {
        return Err(Error::Consistency(format!(
            "g_{}(iy)/i^{} has imaginary part {im}",
            n + 1,
            n + 1
        )));
    }
    BivarPoly::from_terms(re).div_y().map_err(|_| {
        Error::Consistency(format!("g_{}(iy)/i^{} is not divisible by y", n + 1, n + 1))
    })
}

/// `phi_0 ..= phi_{N-1}` from a `g` sequence of length `N + 1`.
pub fn phi_from_g_sequence(g_seq: &FamilySequence) -> Result<FamilySequence> {
    let members = (0..g_seq.n_max())
        .map(|n| phi_from_g(g_seq, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilySequence {
        kind: FamilyKind::Phi,
        members,
        provenance: Provenance::Transform,
    })
}

/// Coefficients of `(exp((2y/h) arctan(h x)) - 1) / (x y)`.
pub fn phi_by_genfun(n_max: usize) -> Result<FamilySequence> {
    let order = n_max + 1;
    let e = scaled_arctan(order, &rational::int(1)).exp()?;
    let shifted = &e - &PowerSeries::one(order);
    let q = shifted
        .divide_exact(&Divisor::XPow(1))?
        .divide_exact(&Divisor::Y)?;
    Ok(FamilySequence {
        kind: FamilyKind::Phi,
        members: q.into_coeffs(),
        provenance: Provenance::Genfun,
    })
}

/// `exp((2y/h) arctan(h x / 2)) / (1 + h^2 x^2 / 4)`, truncated at `n_max`.
/// At `h = 1` this is `4 exp(2y arctan(x/2)) / (x^2 + 4)`.
pub fn phi_monic_genfun_series(n_max: usize) -> Result<PowerSeries> {
    let e = scaled_arctan(n_max, &rational::rat(1, 2)).exp()?;
    let mut denom = vec![BivarPoly::one()];
    if n_max >= 2 {
        denom.push(BivarPoly::zero());
        denom.push(BivarPoly::monomial(rational::rat(1, 4), 0, 2));
    }
    e.divide_exact(&Divisor::Unit(PowerSeries::new(n_max, denom)))
}

/// `hat phi_n = n! [x^n]` of [`phi_monic_genfun_series`].
pub fn phi_monic_genfun(n_max: usize) -> Result<FamilySequence> {
    let s = phi_monic_genfun_series(n_max)?;
    let members = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&rational::factorial(n as u64)))
        .collect();
    Ok(FamilySequence {
        kind: FamilyKind::PhiMonic,
        members,
        provenance: Provenance::Genfun,
    })
}

/// The closed form `(4 + h^2 x^2)^(-1/h^2) exp((2y/h) arctan(h x / 2))`.
///
/// Its value at `x = 0` is `4^(-1/h^2)`, never 1, so it cannot be the
/// exponential generating function of a sequence starting at `hat phi_0 = 1`.
/// Kept for the normalization check that rules it out.
pub fn power_prefactor_monic_egf(x: f64, y: f64, h: f64) -> f64 {
    (4.0 + h * h * x * x).powf(-1.0 / (h * h)) * (2.0 * y / h * (h * x / 2.0).atan()).exp()
}
