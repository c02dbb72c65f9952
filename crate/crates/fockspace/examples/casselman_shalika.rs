//! The Whittaker-side collapse: acting by s_lambda on |(ell-1)rho> leaves a
//! single ket, the avatar of the Casselman-Shalika formula.
//!
//! ```text
//! cargo run --example casselman_shalika
//! ```

use fockspace::characters::{weyl_character, weyl_dimension};
use fockspace::theorems::Verifier;
use fockspace::Weight;

fn main() -> fockspace::Result<()> {
    let v = Verifier::for_type("A1", 5)?;
    let rs = v.fock().root_system();
    for x in [0, 1, 2, 4] {
        let lambda = Weight::new(vec![x]);
        let base = v.fock().dominant_ket(&rs.rho().scale(v.fock().ell() - 1))?;
        let acted = v
            .fock()
            .act_character(&weyl_character(rs, &lambda)?, &base)?;
        println!(
            "A1 ell=5: s[{x}] . |4> = {acted}   ({} orbit terms collapse to {})",
            weyl_dimension(rs, &lambda)?,
            acted.num_terms()
        );
        assert!(v.casselman_shalika_check(&lambda)?.passed);
    }

    // Whittaker avatars are bare kets at ell*mu^* - rho; walls are rejected.
    println!("avatar of rho: {}", v.whittaker_avatar(&Weight::new(vec![1]))?);
    println!(
        "avatar of 0 is a wall: {:?}",
        v.whittaker_avatar(&Weight::new(vec![0])).err()
    );

    // The linkage sign rule that feeds the proof.
    let r = v.verify_linkage_rho(&Weight::new(vec![2]), 1)?;
    println!("{r}");

    let v = Verifier::for_type("G2", 2)?;
    let r = v.casselman_shalika_check(&Weight::new(vec![2, 1]))?;
    println!("{r}");
    Ok(())
}
