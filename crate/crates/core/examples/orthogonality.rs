//! Orthogonality integrals of phi_n against y / sinh(pi y / h), compared
//! with the two candidate norm constants.
//!
//!     cargo run --release --example orthogonality -- 2

use defml::analysis::{derived_norm, orthogonality_integrals, published_norm};

fn main() -> defml::Result<()> {
    let h: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2.0);
    let n_max = 5;
    let ints = orthogonality_integrals(n_max, h, 1e-12)?;
    println!("h = {h}");
    for row in &ints {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>11.3e}")).collect();
        println!("{}", cells.join(" "));
    }
    for n in 0..=n_max {
        println!(
            "n = {n}: measured {:.12}, 2h^(2n+2)/(n+1) = {:.12}, 2h^(2n)/(n+1) = {:.12}",
            ints[n][n],
            derived_norm(n, h),
            published_norm(n, h)
        );
    }
    Ok(())
}
