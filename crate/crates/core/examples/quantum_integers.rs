//! Exact scalars: quantum integers for both signs of ε, rational functions
//! in lowest terms, and evaluation at a rational q.
//!
//!     cargo run --example quantum_integers

use oddtl::scalars::{delta, qint_ratio, quantum_int, Specialization};
use oddtl::{Epsilon, RatFunc, Rational};

fn main() -> oddtl::Result<()> {
    for eps in [Epsilon::Odd, Epsilon::Classical] {
        println!("ε = {}", eps.value());
        for n in 1..=5 {
            println!("  [{n}] = {}", quantum_int(n, eps));
        }
        println!("  δ = {}", delta(eps));
        println!("  [4]/[3] = {}", qint_ratio(4, 3, eps)?);
    }

    // rational functions are kept reduced, so equal values print identically
    let x: RatFunc = "q^2 - q^-2".parse()?;
    let y: RatFunc = "q - q^-1".parse()?;
    let z = x.div(&y)?;
    println!("(q^2 - q^-2) / (q - q^-1) = {z}");

    let at = Specialization::new(Rational::new(3.into(), 2.into()))?;
    println!("... at q = 3/2: {}", at.apply(&z)?);
    // q = ±1 and q = 0 are rejected
    println!("q = 1 rejected: {}", Specialization::at_int(1).is_err());
    Ok(())
}
