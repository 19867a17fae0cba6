//! Chevalley involution, diagram automorphisms and the Weyl involution w*.
//!
//!     cargo run --example involutions -- D4^2

use lieform::chevalley::{chevalley_automorphism, condition_v_holds, diagram_automorphism};
use lieform::{build_constants, parse_type, weyl_involution, DiagramAutomorphism, RootSystem};

fn main() -> lieform::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3^2".into());
    let t = parse_type(&name)?;
    let sc = build_constants(&RootSystem::of_type(&t))?;

    let phi = chevalley_automorphism(&sc);
    println!("Chevalley involution: order {}, homomorphism {}", phi.order(), phi.is_bracket_homomorphism(&sc));

    let psi = DiagramAutomorphism::for_twist(&t)?;
    let psi_alg = diagram_automorphism(&sc, &psi)?;
    println!("diagram permutation {:?}: order {}", psi.perm_one_based(), psi_alg.order());

    println!("w(psi(alpha_i)) = -alpha_i for all i: {}", condition_v_holds(sc.rs(), &psi));
    match weyl_involution(&sc, &psi) {
        Ok(w) => println!("w*: order {}, commutes with psi {}", w.order(), w.commutes_with(&psi_alg)),
        Err(e) => println!("no Weyl involution: {e}"),
    }
    Ok(())
}
