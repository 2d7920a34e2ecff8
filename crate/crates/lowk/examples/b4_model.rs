// The braid group `B4(S^2)` as `Q16 ∗_{Q8} T*`.

use std::error::Error;

use lowk::b4::B4Model;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = B4Model::build()?;
    let spec = m.spec();
    for (i, s) in m.sigma.iter().enumerate() {
        println!("σ{} = {}", i + 1, m.format(s));
    }
    let ft = spec.pow(&m.word("s1 s2 s3")?, 4);
    println!("full twist (σ1σ2σ3)^4 = {}", m.format(&ft));
    assert_eq!(ft, m.ft);

    let z = m.word("s2^7 s1")?;
    println!(
        "z = σ2^7 σ1: {} | finite order: {} | ψ(z) = {} | π(z) = {}",
        m.format(&z),
        spec.has_finite_order(&z),
        m.psi(&z)?,
        m.pi(&z)
    );
    println!("ρ(σ1) = {}", m.rho(&m.sigma[0]));
    assert!(!spec.has_finite_order(&z));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
