//! Closed-form antiderivatives from the factorized Picard-Fuchs operator
//! and the loop-contribution integral identity they prove.
//!
//! Run with: cargo run --example antiderivatives

use quintic::antider::{check_desired_identity, check_operator_factorization};
use quintic::ifun::{build_ifunctions, build_mirror};

fn main() {
    let order = 8;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    print!("{}", check_operator_factorization(&f, &m).render_plain());
    print!("{}", check_desired_identity(&f, &m).render_plain());
}
