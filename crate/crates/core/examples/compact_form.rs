//! Build the compact real form and certify it: closure under the bracket,
//! negative-definite Killing form, and fixed points of the antilinear involution.
//!
//!     cargo run --example compact_form -- F4

use lieform::compact_form::compact_basis;
use lieform::{build_constants, certify_compact, killing_gram, parse_type, RootSystem};

fn main() -> lieform::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let sc = build_constants(&RootSystem::of_type(&parse_type(&name)?))?;

    let cb = compact_basis(&sc);
    let gram = killing_gram(&sc, &cb)?.gram;
    let diag: Vec<String> = gram.diagonal().iter().map(|d| d.to_string()).collect();
    println!("{name}: {} basis elements, Killing diagonal {}", cb.len(), diag.join(" "));

    let cert = certify_compact(&sc)?;
    println!("closure            {}", cert.closure);
    println!("negative definite  {}", cert.negative_definite);
    println!("antilinear fixed   {}", cert.antilinear_fixed);
    Ok(())
}
