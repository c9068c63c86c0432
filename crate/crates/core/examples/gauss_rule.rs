//! Gauss rule for y / sinh(pi y / h) and its moment exactness.
//!
//!     cargo run --example gauss_rule -- 6 2

use defml::analysis::{gauss_rule, moment_check, Measured};

fn main() -> defml::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let h: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);

    let rule = gauss_rule(n, h)?;
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        println!("{x:>22.16} {w:>22.16e}");
    }
    for r in moment_check(&rule, h, 2 * n + 1, 1e-10)? {
        println!(
            "y^{:<2} rule {:>24} exact {:>24} pass {}",
            r.params.m.unwrap_or(0),
            match &r.measured {
                Measured::Number(v) => format!("{v:.16e}"),
                Measured::Exact(s) => s.clone(),
            },
            r.claimed_derived,
            r.pass
        );
    }
    Ok(())
}
