//! The product theorem: C_lambda factors through the restricted
//! decomposition lambda = ell*lambda_1 + lambda_0 as
//! s_{lambda_1^*} . C_{lambda_0}.
//!
//! ```text
//! cargo run --example steinberg_product
//! ```

use fockspace::theorems::Verifier;
use fockspace::Weight;

fn main() -> fockspace::Result<()> {
    let v = Verifier::for_type("A1", 5)?;
    for x in [3, 8, 10, 23] {
        let lambda = Weight::new(vec![x]);
        let product = v.steinberg_product(&lambda)?;
        let direct = v.fock().canonical_basis(&lambda)?;
        println!(
            "A1 ell=5 lambda={x}: product = {product}  (matches solver: {})",
            product == direct
        );
    }

    // A rank-two sweep, reported per instance.
    let v = Verifier::for_type("B2", 3)?;
    let mut failures = 0;
    let reports = v.sweep_steinberg(4)?;
    for r in &reports {
        if !r.passed {
            failures += 1;
            println!("{r}");
        }
    }
    println!("B2 ell=3 sweep over coordinates <= 4: {} checks, {failures} failures", reports.len());
    Ok(())
}
