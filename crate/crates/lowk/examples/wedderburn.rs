// Simple components of `Q[G]`; their number equals `r_Q`.

use std::error::Error;

use lowk::census::DEFAULT_BRUTE_FORCE_BOUND as BOUND;
use lowk::fconj::r_f;
use lowk::galois::FieldDescriptor;
use lowk::groups::{build_binary_polyhedral, build_dicyclic, build_generalized_quaternion, BinaryPolyhedral};
use lowk::lowerk::wedderburn_shape;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let groups = [
        build_dicyclic(7)?,
        build_generalized_quaternion(5)?,
        build_binary_polyhedral(BinaryPolyhedral::T)?,
        build_binary_polyhedral(BinaryPolyhedral::O)?,
        build_binary_polyhedral(BinaryPolyhedral::I)?,
    ];
    for g in &groups {
        let shape = wedderburn_shape(g)?;
        let text: Vec<String> = shape.iter().map(|c| c.to_string()).collect();
        println!("Q[{}] = {}", g.family(), text.join(" × "));
        assert_eq!(shape.len(), r_f(g, FieldDescriptor::Rational, BOUND)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
