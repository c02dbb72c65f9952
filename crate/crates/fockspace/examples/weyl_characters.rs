//! Exact Weyl characters: dominant multiplicities, orbit expansion, the
//! Schur-basis round trip, and the stretching substitution.
//!
//! ```text
//! cargo run --example weyl_characters
//! ```

use fockspace::characters::{monomial_expand, psi_ell, schur_expand, weyl_character, weyl_dimension};
use fockspace::rootdata::{RootSystem, Weight};

fn main() -> fockspace::Result<()> {
    let rs = RootSystem::from_type_str("G2")?;
    let lambda = Weight::new(vec![1, 1]);
    let c = weyl_character(&rs, &lambda)?;
    println!(
        "G2 character of highest weight {lambda} (dim {}):",
        weyl_dimension(&rs, &lambda)?
    );
    for (mu, m) in c.dominant_multiplicities().iter().rev() {
        println!("  mult[{mu}] = {m}");
    }

    let rs = RootSystem::from_type_str("A1")?;
    let c = weyl_character(&rs, &Weight::new(vec![2]))?;
    let mon = monomial_expand(&rs, &c);
    println!("A1 monomial expansion of s[2]: {mon}");

    // X^2 + X^{-2} is invariant but not a single character.
    let mut m = fockspace::characters::MonomialMap::new();
    m.add(Weight::new(vec![2]), 1);
    m.add(Weight::new(vec![-2]), 1);
    println!("X[2] + X[-2] in the Schur basis: {}", schur_expand(&rs, &m)?);

    // The stretching substitution underlying Frobenius twists.
    let stretched = psi_ell(&mon, 3)?;
    println!("psi_3 of the expansion: {stretched}");
    println!("  in the Schur basis: {}", schur_expand(&rs, &stretched)?);
    Ok(())
}
