//! The level -ell-h action of symmetric functions on the Fock space: each
//! monomial weight mu sends |gamma> to |gamma + ell*mu^*>.
//!
//! Only full Weyl-invariant combinations act on the quotient; the example
//! ends with the classic failure of the single-monomial action.
//!
//! ```text
//! cargo run --example character_action
//! ```

use fockspace::characters::weyl_character;
use fockspace::{FockSpace, RawFockExpression, Weight};

fn main() -> fockspace::Result<()> {
    let f = FockSpace::for_type("A1", 5)?;
    let rs = f.root_system();

    let s1 = weyl_character(rs, &Weight::new(vec![1]))?;
    let s2 = weyl_character(rs, &Weight::new(vec![2]))?;

    let three = f.dominant_ket(&Weight::new(vec![3]))?;
    println!("s[1] . |3>  =  {}", f.act_character(&s1, &three)?);

    let zero = f.dominant_ket(&Weight::new(vec![0]))?;
    println!("s[2] . |0>  =  {}", f.act_character(&s2, &zero)?);

    // Acting before or after straightening gives the same canonical form.
    let nu = Weight::new(vec![-7]);
    let after = f.act_character(&s2, &f.straighten_ket(&nu)?)?;
    let before = f.straighten(&f.act_character_raw(&s2, &RawFockExpression::ket(nu.clone())))?;
    println!("well-definedness at |{nu}>: {}", after == before);

    // A bare monomial is different: |-1> and 0 are equal in the space, but
    // shifting both kets by ell*omega^* separates them.
    let wall = RawFockExpression::ket(Weight::new(vec![-1]));
    let empty = RawFockExpression::new();
    let delta = rs.star(&Weight::new(vec![1])).scale(f.ell());
    println!(
        "single monomial X^omega tears |-1> ~ 0 apart: {} vs {}",
        f.straighten(&wall.translated(&delta))?,
        f.straighten(&empty.translated(&delta))?,
    );
    Ok(())
}
