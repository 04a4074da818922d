// Running the structural checkers over a family and replaying a counterexample.

use cozero::report::verify_text;
use cozero::theorems::{run_suite, FamilySpec};

const SPEC: &str = "
family = Z(2..36)
ideals = all
include = planar_ideal_bound, planarity_transfer, principal_maximal_planar
";

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FamilySpec::parse(SPEC)?;
    let report = run_suite(&spec)?;
    print!("{}", verify_text(&report, false));

    for f in report.failures() {
        let w = f.witness.as_ref().unwrap();
        println!("replaying {} on {} / {}: reproduced = {}", f.theorem_id, w.ring, w.ideal, w.replay()?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
