//! The odd Brauer category: an even crossing, odd cup and cap, loops equal
//! to zero, and a sign-tracking normal form for arbitrary layered words.
//!
//!     cargo run --example odd_brauer

use oddtl::brauer::{brauer_count, OddBrauer};
use oddtl::diagram::{Generator, Layer, LayerWord};

fn main() -> oddtl::Result<()> {
    let sb = OddBrauer::new();
    for n in 0..=4 {
        println!("dim End({n}) = {}", brauer_count(n, n));
    }

    for r in sb.relation_suite() {
        println!("{:<28} {}", r.name, if r.passed { "holds" } else { "FAILS" });
    }

    // cap ∘ crossing = −cap, and a loop vanishes
    let capx = sb.compose(&sb.cap(), &sb.cross())?;
    println!("\ncap ∘ cross = {capx}");
    println!("cap ∘ cup   = {}", sb.compose(&sb.cap(), &sb.cup())?);

    // a longer word, normalized with its sign
    let w = LayerWord::new(
        2,
        vec![
            Layer::new(1, Generator::Cup, 1),
            Layer::new(0, Generator::Cross, 2),
            Layer::new(2, Generator::Cap, 0),
        ],
    )?;
    let f = sb.normalize(&w);
    println!("\nword {:?}\n  = {f}", w.layers().iter().map(|l| l.generator).collect::<Vec<_>>());
    for (d, _) in f.terms() {
        println!("  canonical word of {d}: {} layers", sb.canonical_word(d).len());
    }
    Ok(())
}
