use std::error::Error;

use lowk::lowerk::{bhs_decompose, AbelianGroupExpr, BhsInputs, Copies, SummandName};

/// Symbolic `Wh(Q16 × Z)` and `K̃_0(Q16 × Z)`.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inputs = BhsInputs {
        wh: Some(AbelianGroupExpr::free(1)),
        k0: Some(AbelianGroupExpr::cyclic(2, 1)),
        kminus1: Some(AbelianGroupExpr::cyclic(2, 1)),
        nk0: Some(AbelianGroupExpr::summand(SummandName::NilBass(0), Copies::Finite(1))),
        nk1: Some(AbelianGroupExpr::summand(SummandName::NilBass(1), Copies::Finite(1))),
    };
    let wh = bhs_decompose(&inputs, 1)?;
    let k0 = bhs_decompose(&inputs, 0)?;
    println!("Wh(Q16 × Z)  = {wh}");
    println!("K0~(Q16 × Z) = {k0}");
    println!("{}", serde_json::to_string(&wh)?);

    let missing = BhsInputs {
        wh: inputs.wh.clone(),
        ..Default::default()
    };
    assert!(bhs_decompose(&missing, 1).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
