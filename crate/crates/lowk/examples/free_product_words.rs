// Words in `Z_3 ∗ Z_2 ≅ PSL(2, Z)` and their images in `S_3` and `Z_6`.

use std::error::Error;

use lowk::freeprod::{symmetric_group_s3, FreeProductWord, Perm3};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w: FreeProductWord = "aba^-1bba".parse()?;
    println!("aba^-1bba reduces to {w} ({} syllables)", w.len());
    let c = FreeProductWord::commutator(&FreeProductWord::b(), &FreeProductWord::a());
    println!("[b, a] = {c}, inverse {}, abelianized {}", c.inv(), c.abelianize());
    assert_eq!(c.abelianize(), 0);
    assert_eq!(FreeProductWord::a().pow(3), FreeProductWord::identity());

    let (ra, rb) = (Perm3::cycle(1, 2, 3), Perm3::transposition(1, 2));
    let s3 = symmetric_group_s3(&[ra, rb])?;
    let (ia, ib) = (s3.generators()[0], s3.generators()[1]);
    let img = c.evaluate(&s3, ia, ib);
    println!("[b, a] in S_3 has order {}", s3.order_of(img));
    println!("(1,2)∘(2,3) = {}", Perm3::transposition(1, 2).compose(&Perm3::transposition(2, 3)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
