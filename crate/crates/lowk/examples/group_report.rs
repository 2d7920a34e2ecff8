use std::error::Error;

use lowk::census::DEFAULT_BRUTE_FORCE_BOUND as BOUND;
use lowk::galois::FieldDescriptor;
use lowk::report::{build_family, group_report, GroupFamily, Invariant};

/// JSON report for `Dic_20`, then the text form for `Dic_52`, whose `K̃_0`
/// is outside the lookup table.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let all = [Invariant::Wh, Invariant::K0, Invariant::Kminus1, Invariant::Rf, Invariant::Wedderburn];
    let g = build_family(GroupFamily::Dicyclic, Some(5), None)?;
    println!("{}", group_report(&g, &all, FieldDescriptor::PAdic(2), BOUND)?.to_json());

    let g = build_family(GroupFamily::Dicyclic, Some(13), None)?;
    let r = group_report(&g, &all[..3], FieldDescriptor::Rational, BOUND)?;
    print!("{}", r.to_text());
    assert!(build_family(GroupFamily::Tstar, Some(3), None).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
