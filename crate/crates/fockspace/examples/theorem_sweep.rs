//! Run every identity check over a small grid of types and levels and print
//! a one-line summary per configuration.
//!
//! ```text
//! cargo run --release --example theorem_sweep
//! ```

use fockspace::theorems::Verifier;

fn main() -> fockspace::Result<()> {
    for t in ["A1", "A2", "B2", "G2"] {
        for ell in [2, 3] {
            let v = Verifier::for_type(t, ell)?;
            let reports = v.sweep_all(3, 3, 2, 7)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            for r in reports.iter().filter(|r| !r.passed) {
                println!("{r}");
            }
            println!("{t} ell={ell}: {} checks, {failed} failures", reports.len());
        }
    }
    Ok(())
}
