//! Genus-one ψ- and λ-intersection numbers and the residue-sum identities
//! they control.
//!
//! The dimension constraint forces Σk_i = n on n-pointed genus-one moduli,
//! so any nonzero bracket contains an exponent 0 or 1; the string and
//! dilaton equations therefore close the recursion with the single seed
//! ⟨τ₁⟩ = 1/24. The λ-weighted numbers reduce to multinomials times the
//! base Hodge integral 1/24.

use crate::localization::{regularize, BiSeries, HSeries, TSeries};
use crate::qseries::{RSeries, Ring, SeriesError};
use crate::rat::{factorial, rat_zero, ri, rq, Rat};
use crate::report::{CheckReport, Checked};
use crate::tprime::TPrimePoly;
use std::collections::HashMap;

/// ⟨τ_{k₁}⋯τ_{k_n}⟩ on n-pointed genus-one moduli.
pub fn psi_genus1(exponents: &[usize]) -> Rat {
    let mut memo: HashMap<Vec<usize>, Rat> = HashMap::new();
    psi_rec(exponents, &mut memo)
}

fn psi_rec(exponents: &[usize], memo: &mut HashMap<Vec<usize>, Rat>) -> Rat {
    let n = exponents.len();
    let total: usize = exponents.iter().sum();
    if n == 0 || total != n {
        return rat_zero();
    }
    if n == 1 {
        return rq(1, 24); // ⟨τ₁⟩
    }
    let mut key: Vec<usize> = exponents.to_vec();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let val = if let Some(pos) = key.iter().position(|&k| k == 0) {
        // string equation: remove the τ₀ insertion
        let mut rest: Vec<usize> = key.clone();
        rest.remove(pos);
        let mut acc = rat_zero();
        for j in 0..rest.len() {
            if rest[j] >= 1 {
                let mut v = rest.clone();
                v[j] -= 1;
                acc += psi_rec(&v, memo);
            }
        }
        acc
    } else {
        // all parts ≥ 1 and Σ = n forces a 1: dilaton equation
        let pos = key
            .iter()
            .position(|&k| k == 1)
            .expect("dimension constraint forces an exponent 0 or 1");
        let mut rest = key.clone();
        rest.remove(pos);
        // dilaton factor 2g − 2 + (n − 1) is n − 1 at genus one
        psi_rec(&rest, memo) * ri(rest.len() as i64)
    };
    memo.insert(key, val.clone());
    val
}

/// λ-weighted numbers: ∫ λ ψ₁^{i₁}⋯ψ_k^{i_k} = (k−1)!/Πi_j!·(1/24)
/// when Σi_j = k − 1, else 0.
pub fn lambda_psi_genus1(i: &[usize]) -> Rat {
    let k = i.len();
    if k == 0 || i.iter().sum::<usize>() != k - 1 {
        return rat_zero();
    }
    let mut denom = num_bigint::BigInt::from(24);
    for &x in i {
        denom *= factorial(x as u64);
    }
    Rat::new(factorial(k as u64 - 1), denom)
}

/// Λ_b(r₁..r_N) = Σ_{Σβ = b, 0 ≤ β ≤ r} ∫ψ^β Π r_ℓ!/(r_ℓ−β_ℓ)! over
/// b-pointed genus-one moduli (the extra b − N points carry ψ⁰).
pub fn lambda_b(b: usize, r: &[i64]) -> Rat {
    if r.iter().any(|&x| x < 0) {
        return rat_zero();
    }
    let n = r.len();
    assert!(b >= n, "need at least as many points as arguments");
    let mut acc = rat_zero();
    let mut beta = vec![0usize; n];
    enumerate_beta(0, b, r, &mut beta, &mut acc);
    acc
}

fn enumerate_beta(idx: usize, remaining: usize, r: &[i64], beta: &mut Vec<usize>, acc: &mut Rat) {
    let n = r.len();
    if idx == n {
        if remaining != 0 {
            return;
        }
        let b_total = beta.iter().sum::<usize>();
        let n_pts = b_total; // Σβ = b by construction of the recursion caller
        let mut exps: Vec<usize> = beta.clone();
        exps.resize(n_pts.max(n), 0);
        // pad to b points handled by caller loop: here n_pts == b
        let mut weight = psi_genus1(&exps);
        if Ring::is_zero(&weight) {
            return;
        }
        for (i, &bi) in beta.iter().enumerate() {
            // r!/(r−β)! = falling factorial
            for s in 0..bi {
                weight *= ri(r[i] - s as i64);
            }
        }
        *acc = acc.clone() + weight;
        return;
    }
    let cap = (r[idx].max(0) as usize).min(remaining);
    for v in 0..=cap {
        beta[idx] = v;
        enumerate_beta(idx + 1, remaining - v, r, beta, acc);
    }
    beta[idx] = 0;
}

/// Residue ladder R_a := [ℏ^{a−1}]·Z per q-degree (t′-free input).
///
/// A factor R_a multiplies at least a other factors of q-valuation ≥ 1 in
/// every residue sum below, so its coefficients beyond q^{order−a+1} never
/// contribute; cutting there keeps every read inside the validity window.
pub fn residue_ladder(z: &HSeries, amax: usize) -> Vec<RSeries> {
    let n = z.order();
    (0..=amax)
        .map(|a| {
            RSeries::build(n, |d| {
                if a > 0 && d + a > n + 1 {
                    rat_zero()
                } else {
                    z.coeff(d).coeff(a as i64 - 1)
                }
            })
        })
        .collect()
}

/// Verifies Σ_m (1/m) Σ_{Σa = m−1−a₀} Π (−1)^{a_ℓ}/a_ℓ!·R_{a_ℓ} = η^{a₀+1}/(a₀+1)
/// for a regularizable input with residue pair (η, Z̄).
pub fn check_formula1(z: &HSeries, a0: usize) -> Result<CheckReport, SeriesError> {
    let mut rep = CheckReport::new("residue power sum");
    let n = z.order();
    let pair = regularize(&crate::localization::embed_r_to_bi(&RSeries::zero(n)).add(
        &z.map(|h| TPrimePoly::constant(h.clone())),
    ))?;
    let eta = crate::localization::tseries_slice(&pair.eta, 0);

    let ladder = residue_ladder(z, n + a0 + 1);
    for (j, rj) in ladder.iter().enumerate() {
        if !Ring::is_zero(rj.coeff(0)) {
            rep.push(Checked::fail(
                "residue ladder has positive q-valuation",
                format!("R_{j} has nonzero q^0 term"),
            ));
            return Ok(rep);
        }
    }

    // F(x) = Σ_j (−1)^j/j!·R_j x^j; the m-th summand reads [x^{m−1−a₀}] F^m / m
    let xdeg = n.saturating_sub(1);
    let fpoly: Vec<RSeries> = (0..=xdeg.max(a0))
        .map(|j| {
            let c = Rat::new(
                if j % 2 == 0 { 1.into() } else { (-1).into() },
                factorial(j as u64),
            );
            ladder[j].scale(&c)
        })
        .collect();
    let mut lhs = RSeries::zero(n);
    let mut fpow: Vec<RSeries> = vec![RSeries::one(n)];
    for m in 1..=n {
        fpow = poly_mul(&fpow, &fpoly, xdeg, n);
        if let Some(s) = (m as i64 - 1 - a0 as i64).try_into().ok().and_then(|s: usize| fpow.get(s))
        {
            lhs = lhs.add(&s.scale(&rq(1, m as i64)));
        }
    }
    let rhs = eta.pow(a0 + 1).scale(&rq(1, a0 as i64 + 1));
    rep.push_series_eq(&format!("power sum (a = {a0})"), &lhs, &rhs);
    Ok(rep)
}

fn poly_mul(a: &[RSeries], b: &[RSeries], xdeg: usize, order: usize) -> Vec<RSeries> {
    let top = (a.len() + b.len()).saturating_sub(2).min(xdeg);
    let mut out = vec![RSeries::zero(order); top + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > top {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Partitions of `total` into exactly `parts` non-negative parts, as
/// non-increasing vectors.
fn padded_partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(remaining: usize, slots: usize, maxpart: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = remaining.min(maxpart);
        for v in (0..=hi).rev() {
            if v == 0 && remaining > 0 {
                return; // remaining parts would all be 0
            }
            cur.push(v);
            rec(remaining - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, total, &mut cur, &mut out);
    out
}

/// The ψ-sum
/// X := Σ_k (1/k!) Σ_{Σa = k} ⟨τ_{a₁}⋯τ_{a_k}⟩ Π (−1)^{a_ℓ} k!/(Π mult!)·R_{a_ℓ}
/// against −(1/24)·\[ℏ⁰\] ln(1 + Z̄) for the regularized cap series.
pub fn check_lemm_x(z6: &BiSeries) -> Result<CheckReport, SeriesError> {
    let mut rep = CheckReport::new("log residue sum");
    let n = z6.order();
    let pair = regularize(z6)?;

    // residue ladder of the full t′-graded series, with the same q-adic cut
    let ladder: Vec<TSeries> = (0..=n)
        .map(|a| {
            TSeries::build(n, |d| {
                if a > 0 && d + a > n + 1 {
                    TPrimePoly::zero()
                } else {
                    z6.coeff(d).map(|h| h.coeff(a as i64 - 1))
                }
            })
        })
        .collect();

    let mut x = TSeries::zero(n);
    for k in 1..=n {
        for part in padded_partitions(k, k) {
            let psi = psi_genus1(&part);
            if Ring::is_zero(&psi) {
                continue;
            }
            // multiplicity k!/Π mult_j! against the 1/k! prefactor
            let mut mults: HashMap<usize, u64> = HashMap::new();
            for &p in &part {
                *mults.entry(p).or_insert(0) += 1;
            }
            let mut denom = num_bigint::BigInt::from(1);
            for (_, c) in mults {
                denom *= factorial(c);
            }
            let sign = part.iter().sum::<usize>(); // = k
            let mut coeff = psi * Rat::new(1.into(), denom);
            if sign % 2 == 1 {
                coeff = -coeff;
            }
            let mut term = TSeries::one(n).scale(&coeff);
            for &a in &part {
                term = term.mul(&ladder[a]);
            }
            x = x.add(&term);
        }
    }

    // −(1/24)·[ℏ⁰] ln(1 + Z̄)
    let log_zbar = BiSeries::one(n).add(&pair.zbar).log()?;
    let rhs = crate::localization::hcoeff_bi(&log_zbar, 0).scale(&rq(-1, 24));
    for s in 0..3 {
        rep.push_series_eq(
            &format!("psi-sum = -(1/24) ln(1+Zbar)|_h=0, t'^{s}"),
            &tseries_slice_local(&x, s),
            &tseries_slice_local(&rhs, s),
        );
    }
    Ok(rep)
}

fn tseries_slice_local(z: &TSeries, k: usize) -> RSeries {
    z.map(|c| c.part(k).clone())
}

/// Λ-recursion Λ_{b+1}(r) = Σ_i r_i Λ_b(r − e_i) on a grid.
pub fn check_lambda_recursion(bmax: usize, rmax: i64) -> CheckReport {
    let mut rep = CheckReport::new("string recursion grid");
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    for n in 1..=3usize {
        gen_vectors(n, rmax, &mut vec![], &mut vectors);
    }
    let mut ok = true;
    let mut detail = String::new();
    for r in &vectors {
        let n = r.len();
        for b in n..=bmax.saturating_sub(1) {
            let lhs = lambda_b(b + 1, r);
            let mut rhs = rat_zero();
            for i in 0..n {
                let mut rm = r.clone();
                rm[i] -= 1;
                rhs += ri(r[i]) * lambda_b(b, &rm);
            }
            if lhs != rhs {
                ok = false;
                detail = format!("b = {b}, r = {r:?}");
                break;
            }
        }
    }
    rep.push(Checked::from_bool("recursion grid", ok, &detail));
    rep
}

fn gen_vectors(n: usize, rmax: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == n {
        if cur.iter().sum::<i64>() <= rmax {
            out.push(cur.clone());
        }
        return;
    }
    for v in 0..=rmax {
        cur.push(v);
        if cur.iter().sum::<i64>() <= rmax {
            gen_vectors(n, rmax, cur, out);
        } else {
            cur.pop();
            break;
        }
        cur.pop();
    }
}

/// ∫ψ₁⋯ψ_N = (N−1)!/24 and the Λ diagonal Λ_N(1,…,1) = N!(N−1)!/24.
pub fn check_psi_products(nmax: usize) -> CheckReport {
    let mut rep = CheckReport::new("psi products");
    for n in 1..=nmax {
        let got = psi_genus1(&vec![1; n]);
        let expect = Rat::new(factorial(n as u64 - 1), 24.into());
        rep.push(Checked::from_bool(
            &format!("psi_1..psi_{n} product"),
            got == expect,
            &format!("got {got}, expected {expect}"),
        ));
    }
    // only β = (1,…,1) contributes on the diagonal, with unit weights
    for n in 1..=nmax.min(6) {
        let got = lambda_b(n, &vec![1; n]);
        let expect = Rat::new(factorial(n as u64 - 1), 24.into());
        rep.push(Checked::from_bool(
            &format!("Lambda_{n}(1,..,1)"),
            got == expect,
            &format!("got {got}, expected {expect}"),
        ));
    }
    rep
}
