//! The edge-sum S-series computed two ways: a direct weighted sum over
//! localized edge factors, and the period-derivative route read at the
//! flat coordinate.
//!
//! Run with: cargo run --example edge_series

use quintic::contrib::{check_s_series, s_series_closed, s_series_direct};
use quintic::ifun::build_ifunctions;
use quintic::rat::{rat_str, ri};

fn main() {
    let order = 8;
    let f = build_ifunctions(order);
    let one = ri(1);

    println!("S(0,-1) by the direct edge sum:");
    let direct = s_series_direct(order, &one, 0, -1);
    let vals: Vec<String> = direct.coeffs().iter().map(rat_str).collect();
    println!("  {}", vals.join(", "));

    println!("S(0,-1) by the period route:");
    let closed = s_series_closed(&f, &one, 0, -1).unwrap();
    let vals: Vec<String> = closed.coeffs().iter().map(rat_str).collect();
    println!("  {}", vals.join(", "));

    println!();
    print!("{}", check_s_series(&f, &one).render_plain());
}
