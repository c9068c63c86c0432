//! Build g and phi three ways each and confirm the results are identical
//! polynomials.
//!
//!     cargo run --release --example cross_check -- 30

use defml::families::{
    g_by_convolution, g_by_genfun, g_by_recurrence, phi_by_genfun, phi_by_recurrence,
    phi_from_g_sequence,
};

fn main() -> defml::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);

    let g = g_by_recurrence(n);
    let conv_ok = g.members.iter().enumerate().all(|(k, p)| &g_by_convolution(k) == p);
    let genfun_ok = g.first_mismatch(&g_by_genfun(n)).is_none();
    println!("g, n <= {n}: convolution {conv_ok}, generating function {genfun_ok}");

    let phi = phi_by_recurrence(n);
    let transform_ok = phi.first_mismatch(&phi_from_g_sequence(&g_by_recurrence(n + 1))?).is_none();
    let phi_genfun_ok = phi.first_mismatch(&phi_by_genfun(n)?).is_none();
    println!("phi, n <= {n}: transform {transform_ok}, generating function {phi_genfun_ok}");

    g.check_invariants()?;
    phi.check_invariants()?;
    println!("degree, parity and h-evenness hold for both");
    println!("largest member: g_{n} = {}", g.members[n]);
    Ok(())
}
