//! Exponential regularization of the cap series at ℏ = 0: the unique
//! splitting 1 + Z = e^{η/ℏ}(1 + Z̄) and the closed forms of the first
//! t′-coefficients of η.
//!
//! Run with: cargo run --example regularization

use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::localization::{
    eta_coefficients, ghost_z01, regularize, tseries_slice, z6_star, LocCfg,
};
use quintic::rat::{rat_str, rq};
use quintic::tprime::TPrimePoly;

fn main() {
    let order = 8;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    let cfg = LocCfg::new(order);

    let pair = regularize(&z6_star(&cfg, &m)).expect("cap series is regularizable");
    println!("eta coefficients of the regularized cap series:");
    for k in 0..3 {
        let vals: Vec<String> = tseries_slice(&pair.eta, k)
            .coeffs()
            .iter()
            .map(rat_str)
            .collect();
        println!("  t'^{k}: {}", vals.join(", "));
    }

    println!();
    print!("{}", eta_coefficients(&cfg, &m).render_plain());

    // the ghost specialization has the harmonic ratio as its weight
    let ghost = ghost_z01(&cfg, &m)
        .map(|h| TPrimePoly::constant(h.clone()))
        .scale(&rq(1, 5));
    let gp = regularize(&ghost).expect("ghost series is regularizable");
    let vals: Vec<String> = tseries_slice(&gp.eta, 0).coeffs().iter().map(rat_str).collect();
    println!("\nghost weight g1/I0: {}", vals.join(", "));
}
