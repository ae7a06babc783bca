//! The full genus-one pipeline: the four fixed-locus contributions, the
//! closed-form free energy they force, and the invariant table.
//!
//! Run with: cargo run --example genus1_assembly

use quintic::contrib::{assemble, check_assembly};
use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::rat::rat_str;

fn main() {
    let order = 12;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);

    print!("{}", check_assembly(&f, &m).render_plain());

    let set = assemble(&f, &m).unwrap();
    println!("\ncontribution values at q^1:");
    for (name, s) in [
        ("vertex remainder", &set.a_remainder),
        ("loop", &set.b),
        ("vertex at one", &set.c),
        ("five-spin", &set.d),
        ("F1'", &set.f1_prime),
    ] {
        println!("  {name}: {}", rat_str(s.coeff(1)));
    }

    println!("\ngenus-1 invariants:");
    for (i, v) in set.n1.iter().take(10).enumerate() {
        println!("  N_{{1,{}}} = {}", i + 1, rat_str(v));
    }
}
