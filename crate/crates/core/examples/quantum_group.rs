//! The representation side: U_q(osp(1|2)) weight modules, the functor
//! G : STL → modules on V^{⊗n}, and tensor-power decompositions.
//!
//!     cargo run --release --example quantum_group

use oddtl::osp::{decompose_tensor_power, equivariance_check, theta_triangularity, GFunctor, OspModule};
use oddtl::scalars::Specialization;
use oddtl::tl::Stl;
use oddtl::Epsilon;

fn main() -> oddtl::Result<()> {
    for m in 0..=4 {
        let v = OspModule::irreducible(m, Epsilon::Odd);
        println!("{}: SCh = {}, EF - εFE = [wt]: {}", v.name(), v.supercharacter(), v.check_defining_relation()?);
    }

    let stl = Stl::odd();
    let g = GFunctor::symbolic(&stl);
    println!("\nG(cap) = {:?}", g.image(&stl.cap())?.matrix());
    println!("G(cup) = {:?}", g.image(&stl.cup())?.matrix());
    for e in equivariance_check(&stl)? {
        println!("G({}) is a module map: {}", e.map, e.commutes);
    }

    let g2 = GFunctor::specialized(&stl, &Specialization::at_int(2)?);
    for (m, n) in [(2, 2), (3, 3), (4, 4), (2, 6)] {
        let (rank, dim) = g2.hom_rank(m, n)?;
        println!("Hom({m}, {n}): {dim} diagrams, images of rank {rank}");
    }
    let theta = theta_triangularity(&g, 4)?;
    println!("θ at m = 4: diagonal {:?}, violations {}", theta.diagonal, theta.violations);

    for n in 1..=5 {
        let d = decompose_tensor_power(n)?;
        println!("{} = {}", d.module, serde_json::to_string(&d.summands).expect("serializable"));
    }
    Ok(())
}
