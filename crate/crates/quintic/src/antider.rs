//! Closed-form antiderivatives of degree-four differential polynomials in
//! the periods, built from the first-order factorization of the
//! Picard-Fuchs operator, and the loop-contribution integral identity they
//! prove.
//!
//! The key operator facts: L∘∂_t I_k = ∂_t⁴ I_k on solutions, and
//! I₀·L = ∂_t ∘ (I₀β) ∘ D₃ ∘ D₂ ∘ D₁ with β = 1 − α and D_k = ∂_t + c_k,
//! so every ∫ I₀ ∂⁴I_k has the closed form (I₀β)·D₃D₂D₁·∂_t I_k. All
//! antiderivatives here use the boundary condition of vanishing as
//! t → −∞, matching `LogSeries::dt_inv`.

use crate::ifun::{pf_apply, IFunctions, MirrorData};
use crate::logseries::LogSeries;
use crate::pf::{ck_bk, generators, FactorData};
use crate::qseries::{RSeries, SeriesError};
use crate::rat::{ri, rq};
use crate::report::{CheckReport, Checked};

pub struct AntiderivCtx<'a> {
    pub ifun: &'a IFunctions,
    pub m: &'a MirrorData,
    pub fd: FactorData,
    /// I₀·(1 − 5⁵q)
    pub i0_beta: RSeries,
    /// T′·I₀·(1 − 5⁵q)
    pub tp_i0_beta: RSeries,
}

impl<'a> AntiderivCtx<'a> {
    pub fn new(ifun: &'a IFunctions, m: &'a MirrorData) -> Self {
        let g = generators(ifun, m);
        let fd = ck_bk(&g);
        let beta = RSeries::one(m.order).sub(&RSeries::monomial(m.order, 1, ri(3125)));
        let i0_beta = ifun.g[0].mul(&beta);
        let tp_i0_beta = m.t_prime.mul(&i0_beta);
        Self {
            ifun,
            m,
            fd,
            i0_beta,
            tp_i0_beta,
        }
    }

    fn apply_d(&self, k: usize, f: &LogSeries) -> LogSeries {
        f.dt().add(&f.scale_series(&self.fd.c[k]))
    }

    /// (I₀β)·D₃D₂D₁(∂_t f): the antiderivative of I₀·∂_t⁴f for PF solutions f.
    pub fn triple(&self, f: &LogSeries) -> LogSeries {
        let mut g = f.dt();
        for k in 0..3 {
            g = self.apply_d(k, &g);
        }
        g.scale_series(&self.i0_beta)
    }

    /// (T′I₀β)·D₂D₁(∂_t f): the antiderivative of T′·∫I₀∂⁴f (double layer).
    pub fn double(&self, f: &LogSeries) -> LogSeries {
        let mut g = f.dt();
        for k in 0..2 {
            g = self.apply_d(k, &g);
        }
        g.scale_series(&self.tp_i0_beta)
    }

    /// Closed antiderivative of I₀·∂_t⁴ I_k with vanishing boundary value.
    pub fn antiderivative_i0_d4ik(&self, k: usize) -> LogSeries {
        assert!(k < 4);
        self.triple(&self.ifun.i[k])
    }

    /// T as a t-polynomial series: t + (T − t).
    pub fn big_t(&self) -> LogSeries {
        LogSeries::t(self.m.order).add(&LogSeries::pure(self.m.t_shift.clone()))
    }

    /// Closed antiderivatives of I₀″I₀″, I₁″I₀″ and I₁″I₁″.
    pub fn antiderivative_pair(&self, which: PairKind) -> LogSeries {
        let i0 = &self.ifun.i[0];
        let i1 = &self.ifun.i[1];
        match which {
            PairKind::I0I0 => i0
                .dt_n(2)
                .mul(&i0.dt())
                .sub(&i0.dt_n(3).mul(i0))
                .add(&self.triple(i0)),
            PairKind::I1I0 => i0
                .dt()
                .mul(&i1.dt_n(2))
                .sub(&i0.mul(&i1.dt_n(3)))
                .add(&self.triple(i1)),
            PairKind::I1I1 => i1
                .dt_n(2)
                .mul(&i1.dt())
                .sub(&i1.dt_n(3).mul(i1))
                .add(&self.big_t().mul(&self.triple(i1)))
                .sub(&self.double(i1)),
        }
    }

    /// The integration-by-parts route to ∫I₁″I₀″ (via ∫I₁I₀⁗ = ∫T·I₀I₀⁗).
    pub fn antiderivative_i1i0_alt(&self) -> LogSeries {
        let i0 = &self.ifun.i[0];
        let i1 = &self.ifun.i[1];
        i0.dt_n(2)
            .mul(&i1.dt())
            .sub(&i0.dt_n(3).mul(i1))
            .add(&self.big_t().mul(&self.triple(i0)))
            .sub(&self.double(i0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    I0I0,
    I1I0,
    I1I1,
}

/// Probes t^j q^d (j ≤ 2, d ≤ 3) plus the periods themselves.
fn probe_set(ifun: &IFunctions, order: usize) -> Vec<(String, LogSeries)> {
    let mut out: Vec<(String, LogSeries)> = Vec::new();
    for k in 0..4 {
        out.push((format!("I{k}"), ifun.i[k].clone()));
    }
    for j in 0..=2usize {
        for d in 1..=3usize {
            let mut f = LogSeries::pure(RSeries::monomial(order, d, ri(1)));
            for _ in 0..j {
                f = f.mul_t();
            }
            out.push((format!("t^{j} q^{d}"), f));
        }
    }
    out
}

pub fn check_operator_factorization(ifun: &IFunctions, m: &MirrorData) -> CheckReport {
    let mut r = CheckReport::new("operator factorization");
    let ctx = AntiderivCtx::new(ifun, m);

    // (i) L∘∂_t I_k = ∂_t⁴ I_k
    for k in 0..4 {
        r.push_log_eq(
            &format!("L(dt I{k}) = dt^4 I{k}"),
            &pf_apply(&ifun.i[k].dt()),
            &ifun.i[k].dt_n(4),
        );
    }

    // (ii) I₀·L(f) = ∂_t[(I₀β)·D₃D₂D₁ f] on periods and monomial probes
    for (name, f) in probe_set(ifun, m.order) {
        let lhs = pf_apply(&f).scale_series(&ifun.g[0]);
        let mut g = f.clone();
        for k in 0..3 {
            g = ctx.apply_d(k, &g);
        }
        let rhs = g.scale_series(&ctx.i0_beta).dt();
        r.push_log_eq(&format!("I0·L = dt∘(I0 b)·D3D2D1 on {name}"), &lhs, &rhs);
    }

    // closed antiderivatives differentiate back, with zero boundary value
    for k in 0..4 {
        let ad = ctx.antiderivative_i0_d4ik(k);
        let target = ifun.i[k].dt_n(4).scale_series(&ifun.g[0]);
        r.push_log_eq(&format!("dt(closed antider {k}) = I0 dt^4 I{k}"), &ad.dt(), &target);
        match target.dt_inv() {
            Ok(direct) => {
                r.push_log_eq(&format!("closed antider {k} = dt_inv route"), &ad, &direct)
            }
            Err(e) => r.push(Checked::fail(
                &format!("closed antider {k} = dt_inv route"),
                e.to_string(),
            )),
        }
    }

    // the three quadratic antiderivatives and the by-parts consistency
    for (name, which, integ) in [
        (
            "I0''I0''",
            PairKind::I0I0,
            ifun.i[0].dt_n(2).mul(&ifun.i[0].dt_n(2)),
        ),
        (
            "I1''I0''",
            PairKind::I1I0,
            ifun.i[1].dt_n(2).mul(&ifun.i[0].dt_n(2)),
        ),
        (
            "I1''I1''",
            PairKind::I1I1,
            ifun.i[1].dt_n(2).mul(&ifun.i[1].dt_n(2)),
        ),
    ] {
        let ad = ctx.antiderivative_pair(which);
        r.push_log_eq(&format!("dt(antider {name}) = {name}"), &ad.dt(), &integ);
        let q0_ok = (0..=ad.tdeg()).all(|j| crate::qseries::Ring::is_zero(ad.part(j).coeff(0)));
        r.push(Checked::from_bool(
            &format!("antider {name} vanishes at -infinity"),
            q0_ok,
            "nonzero q^0 part",
        ));
    }
    r.push_log_eq(
        "two routes to antider I1''I0'' agree",
        &ctx.antiderivative_pair(PairKind::I1I0),
        &ctx.antiderivative_i1i0_alt(),
    );

    r
}

/// The integrals entering the loop contribution. Everything is a function
/// of the integration variable except the mirror coordinate T, carried as
/// a polynomial weight and substituted at the end.
pub struct LoopIntegrals {
    /// ∫(I₁″ − TI₀″)² dy with T substituted.
    pub sq_mixed: LogSeries,
    /// ∫[(I₁″ − TI₀″)I₀″ − (I₁‴ − TI₀‴)I₀′] dy with T substituted.
    pub cross: LogSeries,
    /// ∫[(I₀″)² − 2I₀‴I₀′] dy.
    pub base: LogSeries,
    /// ∂_t⁻²[(I₃‴ − tI₂‴)′I₀′ + I₂‴(I₁′ − tI₀′)′].
    pub anomalous: LogSeries,
    /// ∂_t⁻¹(I₂‴I₀′).
    pub tail: LogSeries,
}

pub fn loop_integrals(ifun: &IFunctions, m: &MirrorData) -> Result<LoopIntegrals, SeriesError> {
    let i0 = &ifun.i[0];
    let i1 = &ifun.i[1];
    let i2 = &ifun.i[2];
    let i3 = &ifun.i[3];
    let big_t = LogSeries::t(m.order).add(&LogSeries::pure(m.t_shift.clone()));

    let p11 = i1.dt_n(2).mul(&i1.dt_n(2)).dt_inv()?;
    let p10 = i1.dt_n(2).mul(&i0.dt_n(2)).dt_inv()?;
    let p00 = i0.dt_n(2).mul(&i0.dt_n(2)).dt_inv()?;
    let r1 = i1.dt_n(3).mul(&i0.dt()).dt_inv()?;
    let r2 = i0.dt_n(3).mul(&i0.dt()).dt_inv()?;

    let zero = LogSeries::zero(m.order);
    let sq_mixed = LogSeries::eval_poly(&[p11.clone(), p10.scale(&ri(-2)), p00.clone()], &big_t);
    let cross = LogSeries::eval_poly(&[p10.sub(&r1), p00.neg().add(&r2), zero], &big_t);
    let base = p00.sub(&r2.scale(&ri(2)));

    let t = LogSeries::t(m.order);
    let inner = i3
        .dt_n(3)
        .sub(&t.mul(&i2.dt_n(3)))
        .dt()
        .mul(&i0.dt())
        .add(&i2.dt_n(3).mul(&i1.dt().sub(&t.mul(&i0.dt())).dt()));
    let anomalous = inner.dt_inv()?.dt_inv()?;
    let tail = i2.dt_n(3).mul(&i0.dt()).dt_inv()?;

    Ok(LoopIntegrals {
        sq_mixed,
        cross,
        base,
        anomalous,
        tail,
    })
}

/// Prepotential antiderivative ∂_T⁻¹J₂ = T³/6 + (instanton part vanishing
/// as t → −∞).
pub fn prepotential(m: &MirrorData) -> Result<LogSeries, SeriesError> {
    let big_t = LogSeries::t(m.order).add(&LogSeries::pure(m.t_shift.clone()));
    let t3 = big_t.mul(&big_t).mul(&big_t).scale(&rq(1, 6));
    let j2_inst = m.j[2].sub(&big_t.mul(&big_t).scale(&rq(1, 2))).pure_part()?;
    let inst = LogSeries::pure(j2_inst.mul(&m.t_prime)).dt_inv()?;
    Ok(t3.add(&inst))
}

/// Left side of the loop-contribution identity, assembled term by term.
pub fn loop_identity_lhs(ifun: &IFunctions, m: &MirrorData) -> Result<LogSeries, SeriesError> {
    let li = loop_integrals(ifun, m)?;
    let f = prepotential(m)?;
    Ok(m.f_tt
        .mul(&li.sq_mixed)
        .scale(&rq(-1, 2))
        .sub(&m.j[2].mul(&li.cross))
        .sub(&f.mul(&li.base))
        .add(&li.anomalous)
        .sub(&li.tail.scale_series(&m.t_shift)))
}

/// Right side: (1/2)T″/T′ + 2I₀′/I₀ + (1/5)ln(1 − 5⁵q).
pub fn loop_identity_rhs(ifun: &IFunctions, m: &MirrorData) -> RSeries {
    let order = m.order;
    let tpp = m.t_shift.dt().dt();
    let log_beta = RSeries::one(order)
        .sub(&RSeries::monomial(order, 1, ri(3125)))
        .log()
        .expect("1 - 5^5 q has constant term 1");
    tpp.mul(&m.t_prime.invert().unwrap())
        .scale(&rq(1, 2))
        .add(&ifun.g[0].dt().mul(&m.inv_i0).scale(&ri(2)))
        .add(&log_beta.scale(&rq(1, 5)))
}

pub fn check_desired_identity(ifun: &IFunctions, m: &MirrorData) -> CheckReport {
    let mut r = CheckReport::new("loop integral identity");
    match loop_identity_lhs(ifun, m) {
        Ok(lhs) => {
            let rhs = loop_identity_rhs(ifun, m);
            match lhs.pure_part() {
                Ok(p) => r.push_series_eq("loop identity LHS = RHS", &p, &rhs),
                Err(e) => r.push(Checked::fail("loop identity LHS pure", e.to_string())),
            }
        }
        Err(e) => r.push(Checked::fail("loop identity assembly", e.to_string())),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifun::{build_ifunctions, build_mirror};
    use crate::rat::rat_zero;

    #[test]
    fn factorization_checks_pass() {
        let f = build_ifunctions(8);
        let m = build_mirror(&f);
        let r = check_operator_factorization(&f, &m);
        assert!(r.all_passed(), "{}", r.render_plain());
    }

    #[test]
    fn closed_antiderivative_grading() {
        let f = build_ifunctions(5);
        let m = build_mirror(&f);
        let ctx = AntiderivCtx::new(&f, &m);
        // the k = 1 antiderivative carries t-degree ≤ 1 and zero constant
        let ad = ctx.antiderivative_i0_d4ik(1);
        assert!(ad.tdeg() <= 1);
        assert_eq!(ad.part(0).coeff(0), &rat_zero());
    }

    #[test]
    fn identity_rhs_vanishes_at_q1() {
        let f = build_ifunctions(3);
        let m = build_mirror(&f);
        let rhs = loop_identity_rhs(&f, &m);
        // (1/2)·770 + 2·120 − 3125/5 = 0
        assert_eq!(rhs.coeff(0), &rat_zero());
        assert_eq!(rhs.coeff(1), &rat_zero());
    }

    #[test]
    fn desired_identity_holds() {
        let f = build_ifunctions(8);
        let m = build_mirror(&f);
        let r = check_desired_identity(&f, &m);
        assert!(r.all_passed(), "{}", r.render_plain());
    }
}
