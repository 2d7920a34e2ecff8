// Conjugacy classes, cyclic-subgroup classes and the periodicity conditions.

use std::error::Error;

use lowk::census::{
    centralizer, check_2p_condition, check_p2_condition, conjugacy_classes, is_cyclic_subgroup,
    DEFAULT_BRUTE_FORCE_BOUND,
};
use lowk::groups::{build_binary_polyhedral, klein_four, BinaryPolyhedral};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = build_binary_polyhedral(BinaryPolyhedral::O)?;
    let census = conjugacy_classes(&g, DEFAULT_BRUTE_FORCE_BOUND)?;
    println!("O* has {} conjugacy classes", census.classes.len());
    for (d, r1) in &census.r1_by_order {
        println!("  order {d:>2}: r1 = {r1}, r2 = {}", census.r2(*d));
    }
    println!("cyclic subgroup classes: {}", census.cyclic_subgroup_classes());

    for x in g.elements().filter(|&x| g.order_of(x) >= 3) {
        assert!(is_cyclic_subgroup(&g, &centralizer(&g, x)));
    }
    assert!(check_p2_condition(&g) && check_2p_condition(&g));
    assert!(!check_p2_condition(&klein_four()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
