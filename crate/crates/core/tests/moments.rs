//! Closed-form weight moments against two independent routes: the odd
//! zeta series `4 (k+1)! (h/pi)^(k+2) sum_j (2j+1)^-(k+2)` with an explicit
//! remainder bound, and direct tanh-sinh quadrature.

use std::f64::consts::PI;

use defml::analysis::quadrature::{integrate_weighted_detailed, Monomial};
use defml::analysis::{total_mass, weight_moment, weight_moment_coefficient};
use defml::exact_arith::rational::rat;

fn odd_zeta_moment(k: usize, h: f64) -> (f64, f64) {
    let s = (k + 2) as i32;
    let terms = 200_000usize;
    let partial: f64 = (0..terms).rev().map(|j| ((2 * j + 1) as f64).powi(-s)).sum();
    // sum_{j >= J} (2j+1)^-s <= (2J-1)^(1-s) / (2(s-1))
    let remainder = ((2 * terms - 1) as f64).powi(1 - s) / (2.0 * (s - 1) as f64);
    let fact: f64 = (1..=k + 1).map(|i| i as f64).product();
    let pre = 4.0 * fact * (h / PI).powi(s);
    (pre * partial, pre * remainder)
}

#[test]
fn frozen_values_at_unit_h() {
    assert_eq!(weight_moment_coefficient(0), rat(1, 2));
    assert_eq!(weight_moment_coefficient(2), rat(1, 4));
    assert_eq!(weight_moment_coefficient(1), rat(0, 1));
    assert_eq!(total_mass(1.0).unwrap(), 0.5);
}

#[test]
fn closed_form_matches_odd_zeta_series() {
    for h in [0.5, 1.0, 2.0, 3.0] {
        for k in (0..=12).step_by(2) {
            let closed = weight_moment(k, h).unwrap();
            let (series, remainder) = odd_zeta_moment(k, h);
            let slack = remainder + 1e-13 * closed;
            assert!(
                series <= closed + slack && closed <= series + slack,
                "k={k} h={h}: closed {closed} series {series} remainder {remainder:e}"
            );
        }
    }
}

#[test]
fn closed_form_matches_quadrature() {
    for h in [0.5, 1.0, 2.0] {
        for k in 0..=12u32 {
            let closed = weight_moment(k as usize, h).unwrap();
            let scale = weight_moment((k - k % 2) as usize, h).unwrap();
            let r = integrate_weighted_detailed(&Monomial(k), h, 1e-12 * scale).unwrap();
            assert!(r.tail_bound < 1e-12 * scale);
            assert!((r.value - closed).abs() <= 1e-10 * scale, "k={k} h={h}: {} vs {closed}", r.value);
        }
    }
}

#[test]
fn mass_is_h_squared_over_two() {
    for h in [0.25, 1.0, 4.0] {
        assert!((total_mass(h).unwrap() - h * h / 2.0).abs() <= 1e-15 * h * h);
    }
    assert!(total_mass(0.0).is_err());
    assert!(total_mass(-1.0).is_err());
}
