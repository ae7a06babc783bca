//! Genus-one intersection numbers and the residue-sum identities built
//! from them.
//!
//! Run with: cargo run --example hodge_integrals

use quintic::hodge::{
    check_formula1, check_lambda_recursion, check_lemm_x, check_psi_products, lambda_b,
    psi_genus1,
};
use quintic::ifun::{build_ifunctions, build_mirror};
use quintic::localization::{ghost_z01, z6_star, LocCfg};
use quintic::rat::{rat_str, rq};

fn main() {
    println!("psi numbers:");
    for (v, label) in [
        (psi_genus1(&[1]), "<tau_1>"),
        (psi_genus1(&[0, 2]), "<tau_0 tau_2>"),
        (psi_genus1(&[1, 1, 1]), "<tau_1^3>"),
        (lambda_b(3, &[2, 1, 0]), "Lambda_3(2,1,0)"),
    ] {
        println!("  {label} = {}", rat_str(&v));
    }

    print!("{}", check_psi_products(8).render_plain());
    print!("{}", check_lambda_recursion(5, 4).render_plain());

    let order = 6;
    let f = build_ifunctions(order);
    let m = build_mirror(&f);
    let cfg = LocCfg::new(order);
    let ghost = ghost_z01(&cfg, &m).scale(&rq(1, 5));
    for a in 0..=2usize {
        print!("{}", check_formula1(&ghost, a).unwrap().render_plain());
    }
    print!("{}", check_lemm_x(&z6_star(&cfg, &m)).unwrap().render_plain());
}
