//! Longest Weyl group element, its reduced word and the induced -w0 diagram symmetry.
//!
//!     cargo run --example longest_element -- E6

use lieform::weyl::weyl_group_order;
use lieform::{longest_element, minus_w0, parse_type, RootSystem};

fn main() -> lieform::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D5".into());
    let rs = RootSystem::of_type(&parse_type(&name)?);
    let w0 = longest_element(&rs);

    println!("{}: l(w0) = {} (|positive| = {})", rs.name(), w0.length(), rs.num_positive());
    println!("reduced word: {:?}", w0.word_one_based());
    println!("-w0 on simple roots: {:?}", minus_w0(&rs)?.perm_one_based());
    if let Some(order) = weyl_group_order(&rs) {
        println!("|W| = {order}");
    }
    Ok(())
}
