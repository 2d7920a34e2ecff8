// Finite and virtually cyclic subgroups of sphere braid groups.

use std::error::Error;

use lowk::classify::{maximal_finite_subgroups, maximal_vc_classes_b4, vc_classes_b4, virtually_cyclic_classes_odd};

fn names(list: &[lowk::classify::SubgroupDescriptor]) -> String {
    list.iter().map(|d| d.name.as_str()).collect::<Vec<_>>().join(", ")
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=12 {
        println!("B_{n}(S^2) maximal finite: {}", names(&maximal_finite_subgroups(n)?));
    }
    let vc = virtually_cyclic_classes_odd(9)?;
    let infinite: Vec<_> = vc.iter().filter(|d| d.order().is_none()).cloned().collect();
    println!("B_9(S^2) infinite virtually cyclic: {}", names(&infinite));
    println!("B_4(S^2) infinite virtually cyclic: {}", names(&vc_classes_b4()));
    for d in maximal_vc_classes_b4() {
        println!("  {:<20} maximal: {:?}", d.name, d.maximal);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
