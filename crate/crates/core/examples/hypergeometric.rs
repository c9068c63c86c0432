//! Evaluate g_n through the terminating 2F1 sum and compare with the
//! polynomial, exactly.
//!
//!     cargo run --example hypergeometric

use defml::exact_arith::rational::rat;
use defml::families::{g_by_recurrence, g_hypergeometric};

fn main() -> defml::Result<()> {
    let g = g_by_recurrence(10);
    for (y, h) in [(rat(3, 1), rat(1, 1)), (rat(-5, 7), rat(2, 3)), (rat(11, 4), rat(-3, 2))] {
        for n in [1, 4, 10] {
            let via_sum = g_hypergeometric(n, &y, &h)?;
            let via_poly = g.members[n].eval_exact(&y, &h);
            println!("g_{n}({y}; h={h}) = {via_sum}  (polynomial agrees: {})", via_sum == via_poly);
        }
    }
    Ok(())
}
