// Builds each supported family and prints its order census.

use std::error::Error;

use lowk::census::check_milnor;
use lowk::groups::{
    build_binary_polyhedral, build_cyclic, build_dicyclic, build_generalized_quaternion, BinaryPolyhedral,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let groups = [
        build_cyclic(12)?,
        build_dicyclic(5)?,
        build_generalized_quaternion(4)?,
        build_binary_polyhedral(BinaryPolyhedral::T)?,
        build_binary_polyhedral(BinaryPolyhedral::O)?,
        build_binary_polyhedral(BinaryPolyhedral::I)?,
    ];
    for g in &groups {
        println!(
            "{:>6}  order {:>3}  exponent {:>2}  census {:?}",
            g.family().to_string(),
            g.order(),
            g.exponent(),
            g.order_census()
        );
    }
    for g in &groups[1..] {
        assert!(check_milnor(g), "{} has a unique involution", g.family());
    }

    // Dicyclic groups never build a table, so huge m is cheap.
    let big = build_dicyclic(8191)?;
    let (x, y) = big.dicyclic_xy().ok_or("dicyclic generators")?;
    assert_eq!(big.pow(x, 8191), big.pow(y, 2));
    println!("{}: x^m = y^2 checked without a table", big.family());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
