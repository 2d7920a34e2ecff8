// Witt–Berman counts `r_F` for the binary polyhedral groups.

use std::error::Error;

use lowk::census::DEFAULT_BRUTE_FORCE_BOUND as BOUND;
use lowk::fconj::{f_partition, r_f};
use lowk::galois::FieldDescriptor;
use lowk::groups::{build_binary_polyhedral, build_dicyclic, BinaryPolyhedral};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let fields = ["Q", "Qp:2", "Fp:2", "Qp:3", "Fp:3", "Qp:5", "Fp:5"];
    println!("{:>4} {}", "", fields.map(|f| format!("{f:>5}")).join(""));
    for kind in [BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I] {
        let g = build_binary_polyhedral(kind)?;
        let mut row = format!("{:>4} ", g.family().to_string());
        for f in fields {
            let f: FieldDescriptor = f.parse()?;
            row += &format!("{:>5}", r_f(&g, f, BOUND)?);
        }
        println!("{row}");
    }

    let dic = build_dicyclic(3)?;
    let part = f_partition(&dic, FieldDescriptor::FinitePrime(2), BOUND)?;
    println!("F_2-blocks of Dic_12 (2-regular elements only): {:?}", part.blocks);
    assert_eq!(part.blocks.len(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
