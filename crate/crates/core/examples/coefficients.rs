//! Print the first members of every family with `h` symbolic, and the
//! monic modified family at `h = 1`.
//!
//!     cargo run --example coefficients

use defml::exact_arith::rational::int;
use defml::families::{by_recurrence, FamilyKind};

fn main() {
    for kind in [FamilyKind::G, FamilyKind::GMonic, FamilyKind::Phi, FamilyKind::PhiMonic] {
        println!("{kind}:");
        for (n, p) in by_recurrence(kind, 5).members.iter().enumerate() {
            println!("  {n}: {p}");
        }
    }
    println!("phi-monic at h = 1:");
    for (n, p) in by_recurrence(FamilyKind::PhiMonic, 5).members.iter().enumerate() {
        println!("  {n}: {}", p.specialize_h(&int(1)));
    }
}
