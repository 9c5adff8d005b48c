//! Jones-Wenzl projectors in the odd Temperley-Lieb category, the
//! complement g_n = f_{n-1} ⊗ 1 − f_n and the witnesses u_n, v_n.
//!
//!     cargo run --release --example jones_wenzl [max_n]

use oddtl::jones_wenzl::JonesWenzl;
use oddtl::scalars::qint_ratio;
use oddtl::tl::Stl;

fn main() -> oddtl::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let jw = JonesWenzl::new(Stl::odd());
    let stl = jw.stl();

    println!("f_2 = {}", jw.jw(2)?);
    for n in 1..=max_n {
        let f = jw.jw(n)?;
        let idempotent = stl.compose(&f, &f)? == f;
        let closure = jw.partial_closure(&f)? == jw.jw(n - 1)?.scale(&-qint_ratio(n as i64 + 1, n as i64, stl.epsilon())?);
        println!("f_{n}: {} terms, idempotent {idempotent}, closure = -[{}]/[{n}] f_{}: {closure}", f.len(), n + 1, n - 1);
        if n >= 2 {
            let (g, u, v) = (jw.gn(n)?, jw.un(n)?, jw.vn(n)?);
            println!(
                "     g_{n} idempotent {}, u∘v = g {}, v∘u = f_{} {}",
                stl.compose(&g, &g)? == g,
                stl.compose(&u, &v)? == g,
                n - 2,
                stl.compose(&v, &u)? == jw.jw(n - 2)?
            );
        }
    }
    Ok(())
}
