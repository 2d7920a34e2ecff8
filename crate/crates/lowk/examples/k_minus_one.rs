// `K_{-1}` via Carter's formula, including the large-prime closed form.

use std::error::Error;

use lowk::census::DEFAULT_BRUTE_FORCE_BOUND as BOUND;
use lowk::groups::{build_binary_polyhedral, build_dicyclic, BinaryPolyhedral};
use lowk::lowerk::{carter_closed_form, k_minus_one, lambda};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in [2, 3, 4, 5, 7, 13] {
        let g = build_dicyclic(m)?;
        println!("K_-1({}) = {}", g.family(), k_minus_one(&g, BOUND)?);
    }
    for kind in [BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I] {
        let g = build_binary_polyhedral(kind)?;
        println!("K_-1({}) = {}", g.family(), k_minus_one(&g, BOUND)?);
    }

    // m = 8191 = 2^13 - 1: 2 has order 13, so lambda = 8190 / 26.
    let g = build_dicyclic(8191)?;
    let rank = carter_closed_form(&g).ok_or("closed form")?;
    assert_eq!(rank, lambda(8191)?);
    println!("K_-1({}) = {} (closed form)", g.family(), k_minus_one(&g, BOUND)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
