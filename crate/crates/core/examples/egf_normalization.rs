//! The monic modified family's exponential generating function: the form
//! exp((2y/h) arctan(hx/2)) / (1 + h^2 x^2 / 4) reproduces the recurrence
//! exactly, while a (4 + h^2 x^2)^(-1/h^2) prefactor cannot equal 1 at x = 0.
//!
//!     cargo run --example egf_normalization

use defml::families::{phi_monic_by_recurrence, phi_monic_genfun, power_prefactor_monic_egf};

fn main() -> defml::Result<()> {
    let n = 20;
    let rec = phi_monic_by_recurrence(n);
    let egf = phi_monic_genfun(n)?;
    println!("series coefficients match the recurrence for n <= {n}: {}", rec.first_mismatch(&egf).is_none());
    for h in [0.5, 1.0, 2.0] {
        println!(
            "h = {h}: power-prefactor form at x = 0 gives {:.6} (needs 1)",
            power_prefactor_monic_egf(0.0, 0.0, h)
        );
    }
    Ok(())
}
