//! Generate a root system from its Cartan matrix and inspect root strings.
//!
//!     cargo run --example root_system -- F4

use lieform::{parse_type, RootSystem};

fn main() -> lieform::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::of_type(&parse_type(&name)?);

    println!("{}: Cartan matrix", rs.name());
    for row in rs.cartan() {
        println!("  {row:?}");
    }
    println!("{} positive roots, {} total", rs.num_positive(), rs.len());
    for (i, r) in rs.positive_roots().iter().enumerate() {
        println!("  {:>3}  height {:>2}  {r}", i + 1, r.height());
    }

    // alpha_1-strings through each positive root
    println!("alpha_1-strings (p, q):");
    for b in 1..rs.num_positive() {
        let (p, q) = rs.root_string(0, b)?;
        println!("  through {}: ({p}, {q})", rs.root(b));
    }
    Ok(())
}
