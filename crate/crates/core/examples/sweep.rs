// Invariant sweep over a family, written as CSV.

use cozero::report::{sweep_csv, sweep_rows, write_atomic};
use cozero::theorems::FamilySpec;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FamilySpec::parse("family = Z(2..12)\nideals = all")?;
    let rows = sweep_rows(&spec)?;
    let csv = sweep_csv(&rows)?;
    print!("{csv}");

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("sweep.csv");
    write_atomic(&path, &csv)?;
    eprintln!("{} rows written to {}", rows.len(), path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
