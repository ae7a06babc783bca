//! The mirror map T(t) = I1/I0, its derivative, and the Yukawa coupling
//! in closed form.
//!
//! Run with: cargo run --example mirror_map

use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::qseries::RSeries;
use quintic::rat::{rat_str, ri};

fn main() {
    let order = 6;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);

    println!("mirror map T - t = 5(g5 - g1)/I0:");
    let vals: Vec<String> = m.t_shift.coeffs().iter().map(rat_str).collect();
    println!("  {}", vals.join(", "));

    println!("\nYukawa coupling F_TTT:");
    let vals: Vec<String> = m.f_ttt.coeffs().iter().map(rat_str).collect();
    println!("  {}", vals.join(", "));

    // the closed form (1 - 5^5 q) I0^2 T'^3 F_TTT = 1
    let alpha = RSeries::monomial(order, 1, ri(3125));
    let product = RSeries::one(order)
        .sub(&alpha)
        .mul(&f.g[0])
        .mul(&f.g[0])
        .mul(&m.t_prime.pow(3))
        .mul(&m.f_ttt);
    println!(
        "\n(1 - 5^5 q) I0^2 T'^3 F_TTT = 1: {}",
        if product == RSeries::one(order) { "exact" } else { "FAILED" }
    );
}
