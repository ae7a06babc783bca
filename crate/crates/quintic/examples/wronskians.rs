//! The 2×2 Wronskian lattice of period pairs: six first-order recursions,
//! the symplectic equality M03 = M12, flatness, the order-5 reduction of
//! the exterior square, and the weighted difference anomaly.
//!
//! Run with: cargo run --example wronskians

use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::pf::check_wronskian_identities;

fn main() {
    let order = 10;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    print!("{}", check_wronskian_identities(&f, &m).render_plain());
}
