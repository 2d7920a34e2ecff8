use std::error::Error;

use lowk::groups::{build_binary_polyhedral, build_cyclic, build_dicyclic, BinaryPolyhedral};
use lowk::lowerk::{k0_tilde_lookup, K0Value};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in 2..=13 {
        let g = build_dicyclic(m)?;
        println!("K0~({}) = {}", g.family(), k0_tilde_lookup(&g));
    }
    for kind in [BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I] {
        let g = build_binary_polyhedral(kind)?;
        println!("K0~({}) = {}", g.family(), k0_tilde_lookup(&g));
    }
    assert_eq!(k0_tilde_lookup(&build_cyclic(23)?), K0Value::Unknown);
    assert!(matches!(k0_tilde_lookup(&build_cyclic(19)?), K0Value::Known(e) if e.is_zero()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
