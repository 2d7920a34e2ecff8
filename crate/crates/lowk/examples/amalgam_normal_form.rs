// Normal forms in `Z_4 ∗_{Z_2} Z_4` and torsion detection.

use std::error::Error;

use lowk::amalgam::AmalgamSpec;
use lowk::groups::build_cyclic;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let z4 = build_cyclic(4)?;
    let mut spec = AmalgamSpec::new(
        z4.clone(),
        z4,
        build_cyclic(2)?,
        [vec![0, 2], vec![0, 2]],
        [vec![0, 1], vec![0, 1]],
    )?;
    spec.set_labels(vec!["1".into(), "z".into()], [vec!["1".into(), "s".into()], vec!["1".into(), "t".into()]]);

    // s^3 t^5 s: the core absorbs the even parts.
    let w = spec.reduce(&[(0, 3), (1, 1), (1, 0), (1, 1), (1, 3), (0, 1)])?;
    println!("normal form: {}", spec.format(&w));

    let st = spec.reduce(&[(0, 1), (1, 1)])?;
    let conj = spec.conjugate(&st, &spec.from_factor(0, 1));
    for (name, g) in [("st", &st), ("(st) s (st)^-1", &conj)] {
        println!(
            "{name:>15}: {:<12} syllables {}  order {:?}",
            spec.format(g),
            g.syllable_length(),
            spec.order(g)
        );
    }
    assert!(!spec.has_finite_order(&st));
    assert_eq!(spec.order(&conj), Some(4));
    assert!(spec.core_is_normal());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
