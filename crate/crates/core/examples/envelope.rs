//! The Π-envelope of the odd Temperley-Lieb category: parity shifts, the
//! isomorphism ξ : Π² ≅ 1, and the round trip through the underlying
//! Π-category and back.
//!
//!     cargo run --example envelope

use oddtl::envelope::{round_trip_check, Envelope, PiMorphism, PiObject, XiConvention};
use oddtl::tl::Stl;
use oddtl::Parity;

fn main() -> oddtl::Result<()> {
    let stl = Stl::odd();
    let env = Envelope::new(&stl);

    // the odd cap becomes even once one end is shifted
    let cap = PiMorphism::new(stl.cap(), Parity::Odd, Parity::Even);
    println!("cap^0_1 : {:?} -> {:?} has parity {}", env.source(&cap).shift, env.target(&cap).shift, env.parity(&cap));

    let x = PiObject::new(2usize, Parity::Even);
    println!("ξ at Π^0 2 has parity {}", env.parity(&env.xi(&x)?));
    println!("ζ at Π^0 2 has parity {}", env.parity(&env.zeta(&x)));

    for bound in 1..=3 {
        let report = round_trip_check(&env, bound, XiConvention::ZetaZetaPi)?;
        println!(
            "objects <= {bound}: {} composable pairs, functor {}, bijective {}, ξ preserved {}",
            report.pairs_checked,
            report.functoriality_failures == 0,
            report.bijective,
            report.xi_mismatches == 0
        );
    }
    Ok(())
}
