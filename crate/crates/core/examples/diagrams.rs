//! The odd Temperley-Lieb category: crossingless matchings, layered words,
//! normal forms, composition and the signs that distinguish it from the
//! classical category.
//!
//!     cargo run --example diagrams

use oddtl::diagram::{Generator, Layer, LayerWord};
use oddtl::tl::{canonical_word, catalan, enumerate_basis, Stl};

fn main() -> oddtl::Result<()> {
    for total in (0..=10).step_by(2) {
        println!("dim Hom(0, {total}) = {}, Catalan C_{} = {}", enumerate_basis(0, total).len(), total / 2, catalan(total / 2));
    }

    let stl = Stl::odd();
    println!("\nbasis of Hom(3, 3):");
    for d in enumerate_basis(3, 3) {
        let w = canonical_word(&d);
        println!("  {d}  parity {}  from a word of {} layers", d.parity(), w.len());
    }

    // zigzags: the right one is the identity, the left one picks up ε = -1
    let right = LayerWord::new(1, vec![Layer::new(1, Generator::Cup, 0), Layer::new(0, Generator::Cap, 1)])?;
    let left = LayerWord::new(1, vec![Layer::new(0, Generator::Cup, 1), Layer::new(1, Generator::Cap, 0)])?;
    println!("\nright zigzag = {}", stl.normalize(&right)?);
    println!("left zigzag  = {}", stl.normalize(&left)?);

    // two caps stacked in the other order differ by a sign (super interchange)
    let cap = stl.cap();
    let a = stl.compose(&cap, &stl.tensor(&stl.identity(2), &cap))?;
    let b = stl.compose(&cap, &stl.tensor(&cap, &stl.identity(2)))?;
    println!("\ncap ∘ (1 ⊗ cap) = {a}");
    println!("cap ∘ (cap ⊗ 1) = {b}");

    let classical = Stl::classical();
    println!("\nloop value: odd {}, classical {}", stl.delta(), classical.delta());
    println!("json: {}", stl.to_json(&stl.compose(&cap, &stl.cup())?));
    Ok(())
}
