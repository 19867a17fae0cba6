//! Chevalley basis structure constants and a Jacobi identity sweep.
//!
//!     cargo run --example structure_constants -- B3

use lieform::{build_constants, parse_type, RootSystem};

fn main() -> lieform::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let sc = build_constants(&RootSystem::of_type(&parse_type(&name)?))?;

    println!("{name}: dimension {}", sc.dim());
    for row in sc.rows() {
        println!("  N({:?}, {:?}) = {}", row.alpha, row.beta, row.n);
    }

    let failures =
        if sc.rank() <= 4 { sc.jacobi_failures_exhaustive() } else { sc.jacobi_failures_sampled(10_000, 1) };
    println!("Jacobi failures: {failures}");
    Ok(())
}
