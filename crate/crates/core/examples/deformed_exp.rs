//! Generalized powers, the h-difference operator and the deformed
//! exponential, symbolic and numeric.
//!
//!     cargo run --example deformed_exp

use defml::powers_diff::{
    deformed_exp, deformed_exp_partial_sum, deformed_exp_series, generalized_power,
    generalized_power_symbolic, h_difference, HSign, PowerVariant,
};

fn main() -> defml::Result<()> {
    let p3 = generalized_power_symbolic(3, PowerVariant::Falling);
    println!("y^(3,h) = {p3}");
    println!("Delta y^(3,h) = {}", h_difference(&p3));
    println!("6^(3,2) = {}", generalized_power(6.0, 3, 2.0, PowerVariant::Falling));

    let s = deformed_exp_series(4, HSign::Minus);
    for (n, c) in s.coeffs().iter().enumerate() {
        println!("[x^{n}] e_(-h)(x, y) = {c}");
    }

    let (x, y, h) = (0.3, 1.7, 0.5);
    println!(
        "e_h({x}, {y}) with h = {h}: closed form {:.15}, 60-term sum {:.15}",
        deformed_exp(x, y, h)?,
        deformed_exp_partial_sum(x, y, h, 60)?
    );
    match deformed_exp(-2.0, 0.5, 1.0) {
        Err(e) => println!("x = -2, h = 1: {e}"),
        Ok(v) => println!("unexpected value {v}"),
    }
    Ok(())
}
