//! Acceptance checks. Run with
//!
//!     cargo test -p defml --test acceptance -- --nocapture
//!
//! Each test prints one `PASS` or `FAIL` line before asserting.

use defml::analysis::quadrature::{integrate_weighted, Bounded, GrowthBound};
use defml::analysis::{
    derived_norm, g_zeros_with_residuals, gauss_rule, orthogonality_integrals, orthogonality_matrix,
    phi_zeros_with_residuals, published_norm, weight_moment,
};
use defml::cli::{cmd_coeffs, HValue, Payload};
use defml::exact_arith::rational::{int, rat};
use defml::families::{
    g_by_convolution, g_by_genfun, g_by_recurrence, g_hypergeometric, phi_by_genfun, phi_by_recurrence,
    phi_from_g_sequence, phi_monic_by_recurrence, phi_monic_genfun, power_prefactor_monic_egf, FamilyKind,
};
use defml::verify::{genfun_suite, hdiff_suite, recurrences_suite};
use defml::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS [{id}] {name}");
    } else {
        println!("FAIL [{id}] {name}: {} problem(s), first: {}", failures.len(), failures[0]);
    }
    assert!(failures.is_empty(), "{name}: {failures:#?}");
}

const HS: [f64; 3] = [0.5, 1.0, 2.0];

#[test]
fn c1_triple_oracle_exactness() {
    let n_max = 30;
    let mut bad = Vec::new();

    let g = g_by_recurrence(n_max);
    let g_gen = g_by_genfun(n_max);
    for n in 0..=n_max {
        if g.members[n] != g_by_convolution(n) {
            bad.push(format!("g_{n}: recurrence != convolution"));
        }
        if g.members[n] != g_gen.members[n] {
            bad.push(format!("g_{n}: recurrence != generating function"));
        }
    }

    let phi = phi_by_recurrence(n_max);
    let phi_t = phi_from_g_sequence(&g_by_recurrence(n_max + 1)).expect("transform");
    let phi_gen = phi_by_genfun(n_max).expect("phi genfun");
    for n in 0..=n_max {
        if phi.members[n] != phi_t.members[n] {
            bad.push(format!("phi_{n}: recurrence != transform"));
        }
        if phi.members[n] != phi_gen.members[n] {
            bad.push(format!("phi_{n}: recurrence != generating function"));
        }
    }
    verdict(1, "three constructions of g and phi agree exactly for n <= 30", &bad);
}

fn coeff_rows(family: FamilyKind, h: HValue) -> Vec<(usize, u32, String)> {
    let doc = cmd_coeffs(family, 5, &h).expect("coeffs");
    match doc.payload {
        Payload::Coefficients { rows } => rows.into_iter().map(|r| (r.n, r.y_power, r.coeff)).collect(),
        other => panic!("unexpected payload {other:?}"),
    }
}

fn rows(spec: &[(usize, u32, &str)]) -> Vec<(usize, u32, String)> {
    spec.iter().map(|&(n, k, c)| (n, k, c.to_string())).collect()
}

#[test]
fn c2_published_tables() {
    // g_3 = 2/3 y (2y^2 + h^2), g_4 = 2/3 y^2 (y^2 + 2h^2),
    // g_5 = 2/15 y (2y^4 + 10 h^2 y^2 + 3 h^4)
    let example1 = rows(&[
        (0, 0, "1"),
        (1, 1, "2"),
        (2, 2, "2"),
        (3, 1, "2/3*h^2"),
        (3, 3, "4/3"),
        (4, 2, "4/3*h^2"),
        (4, 4, "2/3"),
        (5, 1, "2/5*h^4"),
        (5, 3, "4/3*h^2"),
        (5, 5, "4/15"),
    ]);
    let example2 = rows(&[
        (0, 0, "1"),
        (1, 1, "1"),
        (2, 0, "-1/2"),
        (2, 2, "1"),
        (3, 1, "-2"),
        (3, 3, "1"),
        (4, 0, "3/2"),
        (4, 2, "-5"),
        (4, 4, "1"),
        (5, 1, "23/2"),
        (5, 3, "-10"),
        (5, 5, "1"),
    ]);
    let mut bad = Vec::new();
    let got1 = coeff_rows(FamilyKind::G, HValue::Symbolic);
    if got1 != example1 {
        bad.push(format!("g table: {got1:?}"));
    }
    let got2 = coeff_rows(FamilyKind::PhiMonic, HValue::Exact(int(1)));
    if got2 != example2 {
        bad.push(format!("hat phi table at h = 1: {got2:?}"));
    }
    verdict(2, "coefficient tables for g_0..g_5 (symbolic h) and hat phi_0..hat phi_5 (h = 1)", &bad);
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-60..=60);
    let den: i64 = rng.gen_range(1..=25);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[test]
fn c3_hypergeometric_equality() {
    let mut rng = ChaCha8Rng::seed_from_u64(201_503);
    let g = g_by_recurrence(15);
    let mut bad = Vec::new();
    let mut pairs = 0;
    while pairs < 50 {
        let y = random_rational(&mut rng);
        let h = random_rational(&mut rng);
        if h == int(0) {
            continue;
        }
        pairs += 1;
        for n in 1..=15 {
            let hyper = g_hypergeometric(n, &y, &h).expect("hypergeometric");
            let poly = g.members[n].eval_exact(&y, &h);
            if hyper != poly {
                bad.push(format!("n={n} y={y} h={h}: {hyper} vs {poly}"));
            }
        }
    }
    verdict(3, "2F1 sum equals g_n exactly at 50 random rational (y, h), n = 1..15", &bad);
}

#[test]
fn c4_identity_suites() {
    let order = 25;
    let mut reports = recurrences_suite(order).expect("recurrences");
    reports.extend(hdiff_suite(order).expect("hdiff"));
    reports.extend(genfun_suite(order).expect("genfun").into_iter().filter(|r| r.identity != "phi_monic_egf_normalization"));
    let required = [
        "g_h_difference",
        "g_parity_h_even",
        "phi_parity_h_even",
        "g_monic_recurrence",
        "phi_monic_recurrence",
        "h_difference_product_rule",
        "e_plus_h_difference",
        "e_minus_h_difference",
        "e_plus_differential",
    ];
    let mut bad: Vec<String> = required
        .iter()
        .filter(|id| !reports.iter().any(|r| r.identity == **id))
        .map(|id| format!("identity {id} not checked"))
        .collect();
    bad.extend(
        reports
            .iter()
            .filter(|r| !r.pass || r.tol != 0.0)
            .map(|r| format!("{} n={:?}: {:?}", r.identity, r.params.n, r.measured)),
    );
    verdict(4, "h-difference, parity, h-sign, monic recurrences, product rule, series identities at order 25", &bad);
}

/// `g_n(iy) / y` at `h = 1` as a real-coefficient function, times its
/// counterpart with `-iy`, divided by `y^2` after cancelling.
fn g_form_integral(n: usize, m: usize, g: &defml::FamilySequence) -> f64 {
    use num_complex::Complex64;
    let reduced = |k: usize, y: f64, sign: f64| -> Complex64 {
        let coeffs = g.members[k].y_coeffs_f64(1.0);
        let iy = Complex64::new(0.0, sign);
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * iy.powu(j as u32) * y.powi(j as i32 - 1))
            .sum()
    };
    let scale = |k: usize| g.members[k].y_coeffs_f64(1.0).iter().map(|c| c.abs()).sum::<f64>();
    let f = Bounded {
        f: |y: f64| (reduced(n, y, -1.0) * reduced(m, y, 1.0)).re,
        bound: GrowthBound {
            scale: scale(n) * scale(m),
            degree: (n + m - 2) as u32,
        },
    };
    integrate_weighted(&f, 1.0, 1e-13).expect("g-form integral")
}

#[test]
fn c5_orthogonality() {
    let n_max = 8;
    let mut bad = Vec::new();
    for h in HS {
        let ints = orthogonality_integrals(n_max, h, 1e-12).expect("integrals");
        for n in 0..=n_max {
            for m in 0..=n_max {
                let v = ints[n][m];
                if n == m {
                    let rel = (v - derived_norm(n, h)).abs() / derived_norm(n, h);
                    if rel > 1e-8 {
                        bad.push(format!("h={h} n={n}: diagonal {v} vs {} (rel {rel:.2e})", derived_norm(n, h)));
                    }
                } else if v.abs() >= 1e-10 * ints[n][n].max(ints[m][m]) {
                    bad.push(format!("h={h} ({n},{m}): off-diagonal {v:e}"));
                }
            }
        }
        let reports = orthogonality_matrix(n_max, h, 1e-10).expect("reports");
        for n in 0..=n_max {
            let r = &reports[n][n];
            let expect_printed = h == 1.0;
            if r.published_match != Some(expect_printed) {
                bad.push(format!("h={h} n={n}: printed constant flag {:?}, expected {expect_printed}", r.published_match));
            }
            if h == 1.0 && (published_norm(n, h) - 2.0 / (n + 1) as f64).abs() > 0.0 {
                bad.push(format!("n={n}: printed constant is not 2/(n+1) at h = 1"));
            }
        }
    }
    // g-form at h = 1: int g_n(-iy) g_m(iy) dy / (y sinh pi y) = 2/n delta_nm
    let g = g_by_recurrence(n_max);
    for n in 1..=n_max {
        for m in n..=n_max {
            let v = g_form_integral(n, m, &g);
            let want = if n == m { 2.0 / n as f64 } else { 0.0 };
            if (v - want).abs() > 1e-10 * (2.0 / n as f64) {
                bad.push(format!("g-form ({n},{m}): {v} vs {want}"));
            }
        }
    }
    verdict(5, "orthogonality for h in {1/2, 1, 2}, n, m <= 8, derived norm, printed norm flagged off h = 1", &bad);
}

#[test]
fn c6_zeros() {
    let mut bad = Vec::new();
    for h in HS {
        let mut previous: Vec<f64> = Vec::new();
        for n in 1..=20 {
            let zs = phi_zeros_with_residuals(n, h).expect("phi zeros");
            let vals: Vec<f64> = zs.iter().map(|z| z.value).collect();
            if vals.len() != n || vals.iter().any(|v| !v.is_finite()) {
                bad.push(format!("h={h} n={n}: {} real zeros", vals.len()));
                continue;
            }
            if vals.windows(2).any(|w| w[0] >= w[1]) {
                bad.push(format!("h={h} n={n}: zeros not simple and increasing"));
            }
            let span = vals[n - 1].abs().max(1.0);
            for i in 0..n {
                if (vals[i] + vals[n - 1 - i]).abs() > 1e-12 * span {
                    bad.push(format!("h={h} n={n}: not symmetric at {i}"));
                }
            }
            for z in &zs {
                if !(z.scaled_residual < 1e-8) {
                    bad.push(format!("h={h} n={n}: residual {:e} at {}", z.scaled_residual, z.value));
                }
            }
            if n > 1 {
                let ok = (0..n - 1).all(|i| vals[i] < previous[i] && previous[i] < vals[i + 1]);
                if !ok {
                    bad.push(format!("h={h}: zeros of degree {} and {n} do not interlace", n - 1));
                }
            }
            previous = vals;

            let gz = g_zeros_with_residuals(n, h).expect("g zeros");
            if gz.len() != n {
                bad.push(format!("h={h} g_{n}: {} zeros", gz.len()));
            }
            for z in &gz {
                if z.value.re != 0.0 {
                    bad.push(format!("h={h} g_{n}: zero {} off the imaginary axis", z.value));
                }
                if !(z.scaled_residual < 1e-8) {
                    bad.push(format!("h={h} g_{n}: residual {:e} at {}", z.scaled_residual, z.value));
                }
            }
        }
    }
    verdict(6, "hat phi_n zeros real, symmetric, interlacing; g_n zeros on the imaginary axis (n <= 20)", &bad);
}

#[test]
fn c7_gauss_rules() {
    let mut bad = Vec::new();
    for h in HS {
        for n in 1..=12 {
            let rule = gauss_rule(n, h).expect("rule");
            if rule.weights.iter().any(|&w| !(w > 0.0)) {
                bad.push(format!("h={h} n={n}: non-positive weight"));
            }
            for i in 0..n {
                let j = n - 1 - i;
                if rule.nodes[i] != -rule.nodes[j] || rule.weights[i] != rule.weights[j] {
                    bad.push(format!("h={h} n={n}: asymmetric at {i}"));
                }
            }
            for k in 0..=(2 * n - 1) {
                let got = rule.apply(|y| y.powi(k as i32));
                let want = weight_moment(k, h).expect("moment");
                // odd moments vanish; relative error is measured against the even neighbour
                let reference = if k % 2 == 0 { want } else { weight_moment(k - 1, h).unwrap() };
                let rel = (got - want).abs() / reference.abs();
                if !(rel <= 1e-10) {
                    bad.push(format!("h={h} n={n} k={k}: {got} vs {want} (rel {rel:.2e})"));
                }
            }
        }
    }
    verdict(7, "n-point rules (n <= 12) exact on y^k, k <= 2n-1, positive symmetric weights", &bad);
}

#[test]
fn c8_monic_egf() {
    let mut bad = Vec::new();
    let rec = phi_monic_by_recurrence(20);
    let egf = phi_monic_genfun(20).expect("egf");
    if let Some(n) = rec.first_mismatch(&egf) {
        bad.push(format!("derived form differs from the recurrence at n = {n}"));
    }
    let derived0 = egf.members[0].eval_exact(&int(0), &rat(1, 2));
    if derived0 != int(1) {
        bad.push(format!("derived form at x = 0 is {derived0}"));
    }
    for (h, label) in [(0.5, "1/2"), (2.0, "2")] {
        let printed = power_prefactor_monic_egf(0.0, 0.0, h);
        if (printed - 1.0).abs() < 1e-12 {
            bad.push(format!("printed form normalizes at h = {label}"));
        } else {
            let want = 4f64.powf(-1.0 / (h * h));
            if (printed - want).abs() > 1e-15 {
                bad.push(format!("printed form at h = {label} is {printed}, expected 4^(-1/h^2) = {want}"));
            }
        }
    }
    verdict(8, "derived monic EGF matches recurrence for n <= 20; printed form fails x = 0 at h = 1/2, 2", &bad);
}
