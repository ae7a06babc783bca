//! Hypergeometric period functions, the mirror map, and genus-zero invariants.
//!
//! The four periods I₀..I₃ are the h-expansion coefficients of
//! e^{ht} Σ_d q^d Π_{r≤5d}(5h+r) / Π_{r≤d}(h+r)⁵ mod h⁴. Writing
//! G_k(q) for the pure-series expansion coefficients of the summand,
//! I_k = Σ_i (t^i/i!) G_{k−i}; every mirror-symmetry quantity downstream
//! is assembled from the G_k and the mirror map T = I₁/I₀.

use crate::logseries::LogSeries;
use crate::qseries::{revert_to_big_q, RSeries};
use crate::rat::{factorial, harmonic, rat_zero, ri, rq, Rat};
use crate::report::{CheckReport, Checked};
use num_bigint::BigInt;


/// Coefficients of Π_{r≤5d}(5h+r)/Π_{r≤d}(h+r)⁵ mod h⁴ (exact rationals).
pub fn a_coeffs(d: usize) -> [Rat; 4] {
    // numerator Π (r + 5h) truncated at h³
    let mut num = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
    num[0] = ri(1);
    for r in 1..=5 * d {
        let rr = ri(r as i64);
        let mut next = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
        for i in 0..4 {
            next[i] = &num[i] * &rr;
            if i > 0 {
                next[i] += &num[i - 1] * ri(5);
            }
        }
        num = next;
    }
    // denominator Π (r + h)⁵ truncated at h³, then inverted mod h⁴
    let mut den = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
    den[0] = ri(1);
    for r in 1..=d {
        let rr = ri(r as i64);
        for _ in 0..5 {
            let mut next = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
            for i in 0..4 {
                next[i] = &den[i] * &rr;
                if i > 0 {
                    next[i] += den[i - 1].clone();
                }
            }
            den = next;
        }
    }
    let d0 = den[0].clone();
    let mut inv = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
    inv[0] = ri(1) / &d0;
    for i in 1..4 {
        let mut acc = rat_zero();
        for k in 1..=i {
            acc += &den[k] * &inv[i - k];
        }
        inv[i] = -acc / &d0;
    }
    let mut out = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
    for i in 0..4 {
        for k in 0..=i {
            out[i] += &num[k] * &inv[i - k];
        }
    }
    out
}

/// a₀..a₃ and b₀..b₃ for a single degree d ≥ 1.
///
/// The b_i repackage the same edge factor in localized weights:
/// b₀ = (−1)^d a₀, b₁ = (−1)^{d+1} a₁ d, b₂ = (−1)^d (a₂d² + a₁d),
/// b₃ = (−1)^{d+1} (a₃d³ + 2a₂d² + a₁d).
pub fn ad_bd_coefficients(d: usize) -> Result<([Rat; 4], [Rat; 4]), String> {
    if d == 0 {
        return Err("degree must be positive".into());
    }
    let a = a_coeffs(d);
    let dd = ri(d as i64);
    let sgn = if d % 2 == 0 { ri(1) } else { ri(-1) };
    let b0 = &sgn * &a[0];
    let b1 = -(&sgn) * &a[1] * &dd;
    let b2 = &sgn * (&a[2] * &dd * &dd + &a[1] * &dd);
    let b3 = -(&sgn) * (&a[3] * &dd * &dd * &dd + ri(2) * &a[2] * &dd * &dd + &a[1] * &dd);
    Ok((a, [b0, b1, b2, b3]))
}

/// The four period functions, with the pure expansion coefficients G_k.
#[derive(Clone, Debug)]
pub struct IFunctions {
    pub i: [LogSeries; 4],
    /// G_k(q) = Σ_d a_k(d) q^d; I_k = Σ_i t^i/i!·G_{k−i}.
    pub g: [RSeries; 4],
    pub order: usize,
}

pub fn build_ifunctions(order: usize) -> IFunctions {
    let mut table: Vec<[Rat; 4]> = Vec::with_capacity(order + 1);
    for d in 0..=order {
        table.push(a_coeffs(d));
    }
    let g: [RSeries; 4] =
        std::array::from_fn(|k| RSeries::build(order, |d| table[d][k].clone()));
    let i: [LogSeries; 4] = std::array::from_fn(|k| {
        let parts = (0..=k)
            .map(|j| g[k - j].scale(&Rat::new(BigInt::from(1), factorial(j as u64))))
            .collect();
        LogSeries::from_parts(parts)
    });
    IFunctions { i, g, order }
}

/// Mirror map and the special-geometry data derived from it.
#[derive(Clone, Debug)]
pub struct MirrorData {
    pub order: usize,
    /// T − t = G₁/I₀ (zero constant term).
    pub t_shift: RSeries,
    /// T′ = 1 + ∂_t(T − t).
    pub t_prime: RSeries,
    /// J_k = I_k/I₀.
    pub j: [LogSeries; 4],
    /// F_T = J₂ (t-degree 2).
    pub f_t: LogSeries,
    /// F_TT = ∂_T J₂ (t-degree 1).
    pub f_tt: LogSeries,
    /// Yukawa coupling F_TTT = ∂_T² J₂, a pure q-series.
    pub f_ttt: RSeries,
    /// g₁, g₅: harmonic-weighted sums Σ q^d (5d)!/(d!)⁵ H_{ld}.
    pub g1: RSeries,
    pub g5: RSeries,
    /// 1/I₀ cached.
    pub inv_i0: RSeries,
}

/// ∂_T = (1/T′)·∂_t on t-polynomial series.
pub fn d_big_t(f: &LogSeries, m: &MirrorData) -> LogSeries {
    f.dt().scale_series(
        &m.t_prime
            .invert()
            .expect("T' has constant term 1"),
    )
}

pub fn build_mirror(ifun: &IFunctions) -> MirrorData {
    let order = ifun.order;
    let inv_i0 = ifun.g[0].invert().expect("I0 has constant term 1");
    let t_shift = ifun.g[1].mul(&inv_i0);
    let t_prime = RSeries::one(order).add(&t_shift.dt());
    let j: [LogSeries; 4] =
        std::array::from_fn(|k| ifun.i[k].scale_series(&inv_i0));
    let f_t = j[2].clone();
    let inv_tp = t_prime.invert().unwrap();
    let f_tt = f_t.dt().scale_series(&inv_tp);
    let f_ttt = f_tt
        .dt()
        .scale_series(&inv_tp)
        .pure_part()
        .expect("Yukawa coupling is a pure series");
    let harmonic_sum = |l: u64| -> RSeries {
        RSeries::build(order, |d| {
            if d == 0 {
                rat_zero()
            } else {
                let fd = factorial(d as u64);
                let base = Rat::new(factorial(5 * d as u64), &fd * &fd * &fd * &fd * &fd);
                base * harmonic(l * d as u64)
            }
        })
    };
    MirrorData {
        order,
        t_shift,
        t_prime,
        j,
        f_t,
        f_tt,
        f_ttt,
        g1: harmonic_sum(1),
        g5: harmonic_sum(5),
        inv_i0,
    }
}

/// N_{0,d} for d = 1..dmax: d·N_{0,d} is the Q^d coefficient of
/// ∂_T F₀ = 5J₂ − (5/2)T², re-expanded in Q = e^T.
pub fn genus0_invariants(m: &MirrorData, dmax: usize) -> Result<Vec<Rat>, String> {
    if dmax > m.order {
        return Err(format!("dmax {} exceeds truncation order {}", dmax, m.order));
    }
    // J₂ − T²/2 is a pure series: the t-parts of I₂/I₀ and (t + τ)²/2 cancel.
    let t = LogSeries::t(m.order);
    let big_t = t.add(&LogSeries::pure(m.t_shift.clone()));
    let pure = m.j[2]
        .sub(&big_t.mul(&big_t).scale(&rq(1, 2)))
        .pure_part()
        .map_err(|e| e.to_string())?;
    let dn = revert_to_big_q(&pure.scale(&ri(5)), &m.t_shift).map_err(|e| e.to_string())?;
    Ok((1..=dmax)
        .map(|d| dn.coeff(d) / ri(d as i64))
        .collect())
}

/// The normalized Picard-Fuchs operator applied to a t-polynomial series:
/// (1−α)∂_t⁴ − α(σ₁∂³ + σ₂∂² + σ₃∂ + σ₄), α = 5⁵q.
pub fn pf_apply(f: &LogSeries) -> LogSeries {
    let n = f.order();
    let alpha = RSeries::monomial(n, 1, ri(3125));
    let beta = RSeries::one(n).sub(&alpha);
    let sigma = [rq(24, 625), rq(2, 5), rq(7, 5), ri(2)]; // σ₄, σ₃, σ₂, σ₁
    let mut out = f.dt_n(4).scale_series(&beta);
    let mut der = f.clone();
    for s in sigma.iter() {
        out = out.sub(&der.scale_series(&alpha.scale(s)));
        der = der.dt();
    }
    out
}

/// Verifies the four coefficient-dictionary identities tying the b_i(d)
/// weights to D_t-polynomials in the periods, as exact q-series equalities.
pub fn check_msp_to_givental(order: usize) -> CheckReport {
    let mut report = CheckReport::new("coefficient dictionary");
    let ifun = build_ifunctions(order);
    let bsum = |k: usize| -> RSeries {
        RSeries::build(order, |d| {
            if d == 0 {
                rat_zero()
            } else {
                let (_, b) = ad_bd_coefficients(d).unwrap();
                if d % 2 == 0 {
                    b[k].clone()
                } else {
                    -b[k].clone()
                }
            }
        })
    };
    let t = LogSeries::t(order);
    let half_t2 = t.mul(&t).scale(&rq(1, 2));
    let sixth_t3 = t.mul(&t).mul(&t).scale(&rq(1, 6));

    // 1 + Σ b₀(−q)^d = I₀
    let lhs0 = RSeries::one(order).add(&bsum(0));
    report.push_series_eq("b0 sum = I0", &lhs0, &ifun.g[0]);

    // Σ b₁(−q)^d = −D_t I₁ + D_t(t I₀)
    let rhs1 = ifun.i[1].dt().neg().add(&t.mul(&ifun.i[0]).dt());
    report.push_logseries_pure_eq("b1 sum", &bsum(1), &rhs1);

    // Σ b₂(−q)^d = D_t² I₂ − D_t(t I₁′) + D_t(t²/2·I₀′)
    let rhs2 = ifun.i[2]
        .dt_n(2)
        .sub(&t.mul(&ifun.i[1].dt()).dt())
        .add(&half_t2.mul(&ifun.i[0].dt()).dt());
    report.push_logseries_pure_eq("b2 sum", &bsum(2), &rhs2);

    // Σ b₃(−q)^d = −D_t³ I₃ + D_t(t I₂″) − D_t(t²/2·I₁″) + D_t(t³/6·I₀″)
    let rhs3 = ifun.i[3]
        .dt_n(3)
        .neg()
        .add(&t.mul(&ifun.i[2].dt_n(2)).dt())
        .sub(&half_t2.mul(&ifun.i[1].dt_n(2)).dt())
        .add(&sixth_t3.mul(&ifun.i[0].dt_n(2)).dt());
    report.push_logseries_pure_eq("b3 sum", &bsum(3), &rhs3);

    report
}

impl CheckReport {
    fn push_logseries_pure_eq(&mut self, name: &str, lhs: &RSeries, rhs: &LogSeries) {
        match rhs.pure_part() {
            Ok(p) => self.push_series_eq(name, lhs, &p),
            Err(e) => self.push(Checked::fail(name, e.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i0_leading_coefficients() {
        let f = build_ifunctions(2);
        // (5d)!/(d!)⁵ at d = 0, 1, 2
        assert_eq!(f.g[0].coeff(0), &ri(1));
        assert_eq!(f.g[0].coeff(1), &ri(120));
        assert_eq!(f.g[0].coeff(2), &ri(113400));
        assert_eq!(f.i[0].tdeg(), 0);
    }

    #[test]
    fn mirror_map_leading_terms() {
        let f = build_ifunctions(3);
        let m = build_mirror(&f);
        // g₅ − g₁ at q¹ is 274 − 120 = 154, so T − t starts at 770q
        assert_eq!(m.g5.coeff(1), &ri(274 * 120 / 120 * 120 / 120));
        assert_eq!(m.g5.coeff(1) - m.g1.coeff(1), ri(154));
        assert_eq!(m.t_shift.coeff(1), &ri(770));
        // G₁ = 5(g₅ − g₁): the two routes to the mirror map agree
        assert_eq!(f.g[1], m.g5.sub(&m.g1).scale(&ri(5)));
        assert_eq!(m.t_prime.coeff(0), &ri(1));
        assert_eq!(m.t_prime.coeff(1), &ri(770));
    }

    #[test]
    fn pf_kills_all_periods() {
        let f = build_ifunctions(8);
        for k in 0..4 {
            assert!(pf_apply(&f.i[k]).is_zero(), "L(I_{k}) != 0");
        }
    }

    #[test]
    fn pf_on_constants_and_t() {
        let one = LogSeries::pure(RSeries::one(4));
        let got = pf_apply(&one);
        // only the σ₄ term acts: −σ₄α = −120q exactly
        assert_eq!(got, LogSeries::pure(RSeries::monomial(4, 1, ri(-120))));
        let t = LogSeries::t(4);
        let got_t = pf_apply(&t);
        // −σ₃α − σ₄α·t = −1250q − 120q·t
        assert_eq!(got_t.part(0), RSeries::monomial(4, 1, ri(-1250)));
        assert_eq!(got_t.part(1), RSeries::monomial(4, 1, ri(-120)));
    }

    #[test]
    fn special_geometry_asymptotics() {
        let f = build_ifunctions(4);
        let m = build_mirror(&f);
        // ∂_T J₂ = T + O(q): its t-degree-1 part starts at 1
        assert_eq!(m.f_tt.part(1).coeff(0), &ri(1));
        assert_eq!(m.f_ttt.coeff(0), &ri(1));
        // (1 − 5⁵q)·I₀²·T′³·F_TTT = 1 exactly
        let alpha = RSeries::monomial(4, 1, ri(3125));
        let lhs = RSeries::one(4)
            .sub(&alpha)
            .mul(&f.g[0])
            .mul(&f.g[0])
            .mul(&m.t_prime.pow(3))
            .mul(&m.f_ttt);
        assert_eq!(lhs, RSeries::one(4));
    }

    #[test]
    fn integrated_symplectic_relation() {
        // ∂_T J₃ + J₂ − T·∂_T J₂ = 0
        let f = build_ifunctions(8);
        let m = build_mirror(&f);
        let t = LogSeries::t(8).add(&LogSeries::pure(m.t_shift.clone()));
        let lhs = d_big_t(&m.j[3], &m)
            .add(&m.j[2])
            .sub(&t.mul(&d_big_t(&m.j[2], &m)));
        assert!(lhs.is_zero());
    }

    #[test]
    fn genus0_values() {
        let f = build_ifunctions(6);
        let m = build_mirror(&f);
        let n0 = genus0_invariants(&m, 3).unwrap();
        assert_eq!(n0[0], ri(2875));
        assert_eq!(n0[1], rq(4876875, 8));
        assert_eq!(n0[2], rq(8564575000, 27));
    }

    #[test]
    fn genus0_multicover_integrality() {
        // N_{0,d} − Σ_{k|d, k>1} n_{d/k}/k³ must be an integer (BPS form)
        let f = build_ifunctions(7);
        let m = build_mirror(&f);
        let n0 = genus0_invariants(&m, 6).unwrap();
        let mut n_bps: Vec<Rat> = Vec::new();
        for d in 1..=6usize {
            let mut v = n0[d - 1].clone();
            for k in 2..=d {
                if d % k == 0 {
                    let kk = ri((k * k * k) as i64);
                    v -= &n_bps[d / k - 1] / kk;
                }
            }
            assert!(v.is_integer(), "n_{d} not integral: {v}");
            n_bps.push(v);
        }
        assert_eq!(n_bps[0], ri(2875));
        assert_eq!(n_bps[1], ri(609250));
        assert_eq!(n_bps[2], ri(317206375));
    }

    #[test]
    fn reversion_preserves_leading_mirror_coefficient() {
        // re-expanding the mirror map in Q keeps the degree-1 coefficient
        let f = build_ifunctions(4);
        let m = build_mirror(&f);
        let rev = crate::qseries::revert_to_big_q(&m.t_shift, &m.t_shift).unwrap();
        assert_eq!(rev.coeff(1), &ri(770));
    }

    #[test]
    fn genus0_stable_under_order_increase() {
        let low = genus0_invariants(&build_mirror(&build_ifunctions(5)), 4).unwrap();
        let high = genus0_invariants(&build_mirror(&build_ifunctions(9)), 4).unwrap();
        assert_eq!(low, high);
    }

    #[test]
    fn ab_coefficients_degree_one() {
        let (a, b) = ad_bd_coefficients(1).unwrap();
        assert_eq!(a[0], ri(120));
        // a₁ = 120·(Σ_{k≤5} 5/k − 5) = 770
        assert_eq!(a[1], ri(770));
        assert_eq!(b[1], ri(770));
        assert_eq!(b[0], ri(-120));
        assert!(ad_bd_coefficients(0).is_err());
    }

    #[test]
    fn b_coefficients_match_direct_expansion() {
        // oracle: expand Π_{k≤5d}((k/d−5)h + k/d) / Π_{k≤d}((1−k/d)h − k/d)⁵
        // mod h⁴ directly and read off b₀..b₃ (the weight is 1 here)
        for d in 1..=6usize {
            let dd = ri(d as i64);
            let mut num = [ri(1), rat_zero(), rat_zero(), rat_zero()];
            for k in 1..=5 * d {
                let c0 = ri(k as i64) / &dd;
                let c1 = ri(k as i64) / &dd - ri(5);
                let mut next = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
                for i in 0..4 {
                    next[i] = &num[i] * &c0;
                    if i > 0 {
                        next[i] += &num[i - 1] * &c1;
                    }
                }
                num = next;
            }
            let mut den = [ri(1), rat_zero(), rat_zero(), rat_zero()];
            for k in 1..=d {
                let c0 = -ri(k as i64) / &dd;
                let c1 = ri(1) - ri(k as i64) / &dd;
                for _ in 0..5 {
                    let mut next = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
                    for i in 0..4 {
                        next[i] = &den[i] * &c0;
                        if i > 0 {
                            next[i] += &den[i - 1] * &c1;
                        }
                    }
                    den = next;
                }
            }
            let mut inv = [ri(1) / &den[0], rat_zero(), rat_zero(), rat_zero()];
            for i in 1..4 {
                let mut acc = rat_zero();
                for k in 1..=i {
                    acc += &den[k] * &inv[i - k];
                }
                inv[i] = -acc / &den[0];
            }
            let mut direct = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
            for i in 0..4 {
                for k in 0..=i {
                    direct[i] += &num[k] * &inv[i - k];
                }
            }
            let (_, b) = ad_bd_coefficients(d).unwrap();
            assert_eq!(direct, b, "edge weight mismatch at degree {d}");
        }
    }

    #[test]
    fn dictionary_to_order_ten() {
        let r = check_msp_to_givental(10);
        assert!(r.all_passed(), "{}", r.render_plain());
    }
}
