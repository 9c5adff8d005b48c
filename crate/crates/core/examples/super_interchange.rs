//! Superspaces and the Koszul sign: `(f ⊗ g)(h ⊗ k) = (−1)^{|g||h|} fh ⊗ gk`.
//!
//!     cargo run --example super_interchange

use oddtl::superlinalg::{tensor_map, tensor_space, Matrix, Parity, SuperMap, SuperSpace};
use oddtl::Rational;

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn main() -> oddtl::Result<()> {
    let v = SuperSpace::new(vec![("v1".into(), Parity::Even), ("v-1".into(), Parity::Odd)])?;
    let vv = tensor_space(&v, &v);
    println!("V ⊗ V: {:?} with parities {:?}", vv.labels(), vv.parities());

    // the odd endomorphism swapping the two basis vectors
    let swap = SuperMap::homogeneous(
        v.clone(),
        v.clone(),
        Parity::Odd,
        Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]])?,
    )?;
    let id = SuperMap::identity(&v);

    let lhs = tensor_map(&id, &swap).compose(&tensor_map(&swap, &id))?;
    let rhs = tensor_map(&swap, &swap);
    println!("(1 ⊗ s)(s ⊗ 1) = (-1)^(|s||s|) s ⊗ s: {}", lhs == rhs.scale(&int(-1)));
    println!("(s ⊗ 1)(1 ⊗ s) = s ⊗ s:                {}", tensor_map(&swap, &id).compose(&tensor_map(&id, &swap))? == rhs);
    Ok(())
}
