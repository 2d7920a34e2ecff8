// `Wh`, `K̃_0` and `K_{-1}` of `Z[B4(S^2)]`.

use std::error::Error;

use lowk::report::{b4_lower_k_report, nil_groups_q8};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = b4_lower_k_report()?;
    print!("{}", report.to_text());
    for twist in 1..=3 {
        println!("NK_1(Z[Q8]) with twist of order {twist}: {}", nil_groups_q8(1, twist)?);
    }
    assert_eq!(report.to_json(), b4_lower_k_report()?.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
