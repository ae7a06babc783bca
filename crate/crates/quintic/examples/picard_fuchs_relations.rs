//! The differential relations from matching the Picard-Fuchs operator
//! against its first-order factorization: Yukawa closed form, flatness,
//! the symplectic polynomial identity, and the fundamental-period ODE.
//!
//! Run with: cargo run --example picard_fuchs_relations

use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::pf::check_b_relations;

fn main() {
    let order = 10;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    print!("{}", check_b_relations(&f, &m).render_plain());
}
