//! Rewrite arbitrary kets into the dominant-ket basis.
//!
//! ```text
//! cargo run --example straightening
//! ```

use fockspace::{FockSpace, Weight};

fn main() -> fockspace::Result<()> {
    let f = FockSpace::for_type("A1", 5)?;
    println!("A1, ell = 5");
    for x in [7, 0, -1, -2, -6, -12, -15] {
        let ket = Weight::new(vec![x]);
        println!("  |{x}>  =>  {}", f.straighten_ket(&ket)?);
    }

    // The same engine runs in any finite type; here the rewriting cascades
    // through both simple directions.
    let f = FockSpace::for_type("A2", 3)?;
    println!("A2, ell = 3");
    for coords in [[-4, 2], [-2, -2], [-5, -1]] {
        let ket = Weight::new(coords.to_vec());
        println!(
            "  |{}>  =>  {}",
            Weight::new(coords.to_vec()),
            f.straighten_ket(&ket)?
        );
    }
    Ok(())
}
