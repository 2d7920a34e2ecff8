use std::error::Error;

use lowk::b4::{run_suite, B4Model, Suite};

/// Runs every check suite on the model and prints a summary per suite.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = B4Model::build()?;
    let mut total = 0;
    for suite in [Suite::Braid, Suite::Actions, Suite::Gamma, Suite::Kernel, Suite::Rs] {
        let checks = run_suite(&m, suite)?;
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        println!("{suite:>8}: {} checks, {} failed", checks.len(), failed.len());
        for c in &failed {
            println!("  FAIL {}: {}", c.check_id, c.statement);
        }
        assert!(failed.is_empty());
        total += checks.len();
    }
    println!("{total} checks passed");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
