//! Arithmetic in Z^π[x, x⁻¹]: the classes [n]_{x,π}, Clebsch-Gordan
//! products and the decomposition of [2]^n.
//!
//!     cargo run --example grothendieck

use oddtl::k0::{chebyshev_genfun_check, clebsch_gordan, decompose_in_basis, k0_class_of_tensor_power, qint_xpi};

fn main() -> oddtl::Result<()> {
    for n in 1..=4 {
        println!("[{n}] = {}", qint_xpi(n)?);
    }
    let (a, b) = (2, 3);
    let product = &qint_xpi(a + 1)? * &qint_xpi(b + 1)?;
    println!("\n[{}][{}] = {product}", a + 1, b + 1);
    println!("Clebsch-Gordan agrees: {}", product == clebsch_gordan(a, b));

    println!("\nΣ [n+1] t^n = 1/(1 - [2]t + πt^2) to order 20: {}", chebyshev_genfun_check(20));

    for n in 0..=6 {
        let parts: Vec<String> = decompose_in_basis(&k0_class_of_tensor_power(n))?
            .iter()
            .map(|s| format!("{}{}V({})", if s.mult > 1 { format!("{}·", s.mult) } else { String::new() }, if s.pi == 1 { "Π" } else { "" }, s.k))
            .collect();
        println!("V^{n} = {}", parts.join(" ⊕ "));
    }
    Ok(())
}
