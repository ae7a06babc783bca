//! Genus-zero invariants from the mirror map, with the multi-cover
//! (BPS) integrality cross-check.
//!
//! Run with: cargo run --example genus0

use quintic::ifun::{build_ifunctions, build_mirror, genus0_invariants};
use quintic::rat::{rat_str, ri, Rat};

fn main() {
    let order = 8;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    let n0 = genus0_invariants(&m, order - 2).unwrap();

    println!("genus-0 invariants:");
    for (i, v) in n0.iter().enumerate() {
        println!("  N_{{0,{}}} = {}", i + 1, rat_str(v));
    }

    // N_{0,d} = sum over k | d of n_{d/k} / k^3 with integer n_d
    println!("\ninstanton numbers from the multi-cover formula:");
    let mut bps: Vec<Rat> = Vec::new();
    for d in 1..=n0.len() {
        let mut v = n0[d - 1].clone();
        for k in 2..=d {
            if d % k == 0 {
                v -= &bps[d / k - 1] / ri((k * k * k) as i64);
            }
        }
        assert!(v.is_integer(), "multi-cover integrality failed at d = {d}");
        println!("  n_{d} = {}", rat_str(&v));
        bps.push(v);
    }
}
