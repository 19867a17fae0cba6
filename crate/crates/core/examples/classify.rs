//! Classify every inner class up to a given rank and list the types without
//! a compact Cartan subalgebra.
//!
//!     cargo run --release --example classify -- 8

use lieform::classifier::exception_mismatches;
use lieform::full_table;

fn main() -> lieform::Result<()> {
    let max_rank = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let records = full_table(max_rank)?;

    let exceptions: Vec<String> =
        records.iter().filter(|r| !r.condition_v).map(|r| r.dynkin.to_string()).collect();
    println!("{} types up to rank {max_rank}", records.len());
    println!("no compact Cartan: {}", exceptions.join(", "));
    println!("disagreements with the exception list: {:?}", exception_mismatches(&records));
    Ok(())
}
