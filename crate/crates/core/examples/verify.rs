//! Every property suite, as `oddtl verify` runs it, with timings.
//!
//!     cargo run --release --example verify [max_n]

use oddtl::checks::{envelope_all, verify_all, SuiteConfig};
use oddtl::tl::Stl;

fn main() {
    let mut cfg = SuiteConfig::default();
    if let Some(n) = std::env::args().nth(1).and_then(|a| a.parse().ok()) {
        cfg.max_n = n;
    } else {
        cfg.max_n = 5;
    }
    for (label, stl) in [("odd", Stl::odd()), ("classical", Stl::classical())] {
        println!("== {label}");
        for c in verify_all(&stl, cfg).into_iter().chain(envelope_all(&stl, cfg)) {
            println!("{} {:<32} {:>7} ms  {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.millis, c.detail);
        }
    }
}
