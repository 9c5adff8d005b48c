//! The diagram expression language: parse, type-check and evaluate in
//! either category.
//!
//!     cargo run --example expressions -- "cap * (id(1) ox jw(2) ox id(1)) * cup ox cup"

use oddtl::brauer::OddBrauer;
use oddtl::expr::{elaborate_brauer, elaborate_stl, parse, parse_typed};
use oddtl::jones_wenzl::JonesWenzl;
use oddtl::tl::Stl;

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["cap * cup", "(cap ox id(1)) * (id(1) ox cup)", "{q + 1}·jw(2) * jw(2)", "cap * cross", "cap * cap"]
            .map(String::from)
            .to_vec();
    }
    let jw = JonesWenzl::new(Stl::odd());
    let sb = OddBrauer::new();
    for text in &inputs {
        println!("{text}");
        match parse_typed(text) {
            Err(e) => println!("  error: {e}"),
            Ok((e, m, n)) => {
                println!("  parsed as {e} : {m} -> {n}");
                match elaborate_stl(&e, &jw) {
                    Ok(f) => println!("  STL: {f}"),
                    Err(err) => println!("  STL: {err}"),
                }
                match elaborate_brauer(&parse(text).expect("parsed above"), &sb) {
                    Ok(f) => println!("  SB:  {f}"),
                    Err(err) => println!("  SB:  {err}"),
                }
            }
        }
    }
}
