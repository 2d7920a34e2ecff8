// Whitehead ranks: closed form against the census.

use std::error::Error;

use lowk::census::DEFAULT_BRUTE_FORCE_BOUND as BOUND;
use lowk::groups::{build_binary_polyhedral, build_cyclic, build_dicyclic, BinaryPolyhedral};
use lowk::lowerk::{whitehead_closed_form, whitehead_rank_census};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut groups = vec![build_cyclic(5)?, build_cyclic(12)?];
    for m in [2, 3, 4, 5, 6, 9] {
        groups.push(build_dicyclic(m)?);
    }
    for kind in [BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I] {
        groups.push(build_binary_polyhedral(kind)?);
    }
    for g in &groups {
        let census = whitehead_rank_census(g, BOUND)?;
        let closed = whitehead_closed_form(g).ok_or("closed form")?;
        println!("rank Wh({}) = {census}", g.family());
        assert_eq!(census, closed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
