//! The bar involution: semilinear (v -> v^-1), triangular on dominant kets,
//! and an involution on canonical forms.
//!
//! ```text
//! cargo run --example bar_involution
//! ```

use fockspace::{FockSpace, Weight};

fn main() -> fockspace::Result<()> {
    let f = FockSpace::for_type("A1", 5)?;
    println!("A1, ell = 5");
    for x in [0, 3, 8, 10] {
        let ket = f.dominant_ket(&Weight::new(vec![x]))?;
        let barred = f.bar(&ket)?;
        println!("  bar|{x}>  =  {barred}");
        assert_eq!(f.bar(&barred)?, ket);
    }

    let f = FockSpace::for_type("G2", 2)?;
    let lambda = Weight::new(vec![2, 1]);
    let barred = f.bar(&f.dominant_ket(&lambda)?)?;
    println!("G2, ell = 2");
    println!("  bar|{lambda}>  =  {barred}");
    println!("  bar(bar) is the identity: {}", f.bar(&barred)? == f.dominant_ket(&lambda)?);
    Ok(())
}
