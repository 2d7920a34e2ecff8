use std::error::Error;

use lowk::freeprod::{reidemeister_schreier, FreeProductWord};
use lowk::groups::build_cyclic;

/// The commutator subgroup of `Z_3 ∗ Z_2` is free of rank 2.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let z6 = build_cyclic(6)?;
    let transversal: Vec<FreeProductWord> =
        ["1", "a", "a^2", "b", "ab", "a^2b"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let rs = reidemeister_schreier(&z6, 4, 3, &transversal)?;
    println!("index {}, rank by Euler characteristic {}", rs.index, rs.euler_rank);
    for g in rs.generators.iter().filter(|g| !g.tree_edge) {
        println!("  γ({}, {}) = {}", g.coset, g.letter, g.word);
    }
    let (a, b) = (FreeProductWord::a(), FreeProductWord::b());
    let claimed = [FreeProductWord::commutator(&b, &a), FreeProductWord::commutator(&b, &a.pow(2))];
    assert!(rs.certifies_basis(&claimed));
    println!("free basis: {}, {}", claimed[0], claimed[1]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
