//! The two LLT-style coefficient families and their agreement: canonical
//! basis coefficients of C_{ell*lambda} versus the action coefficients of
//! s_{lambda^*} . |nu> at nu = 0, plus the v = 1 specialization.
//!
//! ```text
//! cargo run --example llt_coefficients
//! ```

use fockspace::theorems::Verifier;
use fockspace::Weight;

fn main() -> fockspace::Result<()> {
    let v = Verifier::for_type("A1", 2)?;

    println!("A1 ell=2 coefficients p[lambda, mu] = coeff of |mu> in C[2*lambda]:");
    for lam in 0..=3i64 {
        for mu in (0..=2 * lam).step_by(2) {
            let p = v.llt_coefficient(&Weight::new(vec![lam]), &Weight::new(vec![mu]))?;
            if !p.is_zero() {
                println!("  p[{lam}, {mu}] = {p}");
            }
        }
    }

    println!("action coefficients of s[lambda^*] . |nu>:");
    for (lam, nu) in [(2i64, 0i64), (1, 1), (1, -4)] {
        let q = v.gh_coefficients(&Weight::new(vec![lam]), &Weight::new(vec![nu]))?;
        println!("  lambda={lam}, nu={nu}:  {q}");
    }

    // The identity tying the two families together at nu = 0.
    for t in ["A1", "B2"] {
        let v = Verifier::for_type(t, 2)?;
        let rank = v.fock().root_system().rank();
        let lambda = Weight::new(vec![1; rank]);
        println!("{}", v.gh_identity_check(&lambda)?);
    }

    // Specializing v = 1 recovers the Schur expansion of the stretched
    // character.
    let v = Verifier::for_type("A1", 2)?;
    for x in 0..=2i64 {
        println!("{}", v.frobenius_check(&Weight::new(vec![x]))?);
    }
    Ok(())
}
