use std::error::Error;

use lowk::galois::{mult_order, phi_image, units, FieldDescriptor};

/// Image of the Galois group of `F(ζ_n)/F` inside the units mod `n`.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 20;
    println!("units mod {n}: {:?}", units(n).residues);
    for field in ["Q", "Qp:2", "Qp:5", "Qp:3", "Fp:3", "Fp:7"] {
        let f: FieldDescriptor = field.parse()?;
        let image = phi_image(f, n)?;
        println!("{field:>5}: {:?}", image.residues);
    }
    assert_eq!(mult_order(2, 7)?, 3);
    assert_eq!(phi_image(FieldDescriptor::PAdic(3), 7)?.residues, units(7).residues);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
