//! The bar-invariant canonical basis and its Kazhdan-Lusztig-type
//! coefficients.
//!
//! ```text
//! cargo run --example canonical_basis
//! ```

use fockspace::{FockSpace, Weight};

fn main() -> fockspace::Result<()> {
    let f = FockSpace::for_type("A1", 2)?;
    println!("C_lambda for A1, ell = 2:");
    for x in 0..=8 {
        let lambda = Weight::new(vec![x]);
        println!("  C[{x}] = {}", f.canonical_basis(&lambda)?);
    }

    let f = FockSpace::for_type("A2", 2)?;
    println!("C_lambda for A2, ell = 2:");
    for a in 0..=2 {
        for b in 0..=2 {
            let lambda = Weight::new(vec![a, b]);
            println!("  C[{lambda}] = {}", f.canonical_basis(&lambda)?);
        }
    }

    // Individual coefficients are exposed directly.
    let f = FockSpace::for_type("A1", 2)?;
    let p = f.kl_coefficient(&Weight::new(vec![0]), &Weight::new(vec![6]))?;
    println!("coefficient of |0> in C[6]: {p}");
    Ok(())
}
