//! Real zeros of the monic modified family and imaginary-axis zeros of g.
//!
//!     cargo run --example zeros -- 8 1.5

use defml::analysis::{g_zeros_with_residuals, phi_zeros_with_residuals};

fn main() -> defml::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let h: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);

    println!("zeros of hat phi_{n} at h = {h}");
    for z in phi_zeros_with_residuals(n, h)? {
        println!("  {:>22.16}  scaled residual {:.1e}", z.value, z.scaled_residual);
    }
    println!("zeros of g_{n} at h = {h}");
    for z in g_zeros_with_residuals(n, h)? {
        println!("  {:>4} {:+.16}i  scaled residual {:.1e}", z.value.re, z.value.im, z.scaled_residual);
    }
    Ok(())
}
