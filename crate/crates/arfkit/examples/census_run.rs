//! Run a small census: every semigroup up to a genus bound, one row each
//! with invariants, Arf flags and reflexive statistics.
//!
//! ```bash
//! cargo run --example census_run
//! ```

use arfkit::{census, census_record, CensusFormat, NumericalSemigroup};

fn main() -> arfkit::Result<()> {
    // a single record, in memory
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    let record = census_record(&s)?;
    println!("record for <{s}>:");
    println!("{}", serde_json::to_string_pretty(&record).unwrap());
    println!();

    // a full run to disk
    let dir = std::env::temp_dir().join("arfkit-census-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("genus6.csv");
    let summary = census(6, &path, CensusFormat::Csv, 2)?;
    println!("census written to {}", path.display());
    println!("{summary}");
    Ok(())
}
