//! Truncated graded characters: the infinite product over loop degrees,
//! expanded layer by layer in q^{-1}.
//!
//! ```text
//! cargo run --example graded_character
//! ```

use fockspace::theorems::Verifier;
use fockspace::Weight;

fn main() -> fockspace::Result<()> {
    let v = Verifier::for_type("A1", 5)?;
    let g = v.affine_graded_character(&Weight::new(vec![0]), 3)?;
    println!("A1 ell=5 lambda=0, layers of the graded character:");
    for (d, layer) in g.layers().iter().enumerate() {
        println!("  q^-{d}: {layer}   (total {})", layer.total());
    }

    let v = Verifier::for_type("A2", 2)?;
    let g = v.affine_graded_character(&Weight::new(vec![1, 0]), 2)?;
    println!("A2 ell=2 lambda=(1,0):");
    for (d, layer) in g.layers().iter().enumerate() {
        println!("  q^-{d}: {} terms, total {}", layer.len(), layer.total());
    }
    Ok(())
}
