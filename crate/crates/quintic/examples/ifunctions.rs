//! Builds the four period functions and verifies that the Picard-Fuchs
//! operator annihilates each of them.
//!
//! Run with: cargo run --example ifunctions

use quintic::ifun::{build_ifunctions, pf_apply};
use quintic::rat::rat_str;

fn main() {
    let order = 6;
    let f = build_ifunctions(order);

    println!("hypergeometric coefficients (5d)!/(d!)^5:");
    let vals: Vec<String> = f.g[0].coeffs().iter().map(rat_str).collect();
    println!("  I0 = {}", vals.join(", "));

    println!("\nperiod t-degrees (I_k carries t-degree exactly k):");
    for k in 0..4 {
        println!("  I{k}: t-degree {}", f.i[k].tdeg());
    }

    println!("\nPicard-Fuchs annihilation:");
    for k in 0..4 {
        let residual = pf_apply(&f.i[k]);
        println!(
            "  L(I{k}) = 0 up to q^{order}: {}",
            if residual.is_zero() { "exact" } else { "FAILED" }
        );
    }
}
