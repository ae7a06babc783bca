//! Truncated power series in q over a pluggable coefficient ring.
//!
//! A `QSeries` stores coefficients for q^0 … q^N inclusive; arithmetic is
//! exact up to and including the truncation order, and binary operations
//! truncate to the smaller order of the two operands. The coefficient
//! ring is anything implementing [`Ring`]: rationals, Laurent series in ℏ,
//! or t′-polynomials over those.

use crate::rat::{factorial, Rat};
use num_traits::{One, Zero};

/// Coefficient-ring interface for series arithmetic.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, s: &Rat) -> Self;
    /// Multiplicative inverse, when one exists.
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Rat) -> Self {
        self * s
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(crate::rat::rat_one() / self)
        }
    }
}

/// Power series Σ_{d=0..N} c_d q^d, exact through q^N.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> QSeries<R> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Series with coefficient function d ↦ f(d).
    pub fn build(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(|d| f(d)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &R {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, v: R) {
        self.coeffs[d] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::build(n, |d| self.coeffs[d].add(&other.coeffs[d]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::build(n, |d| self.coeffs[d].sub(&other.coeffs[d]))
    }

    pub fn neg(&self) -> Self {
        Self::build(self.order(), |d| self.coeffs[d].neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for d1 in 0..=n {
            if self.coeffs[d1].is_zero() {
                continue;
            }
            for d2 in 0..=(n - d1) {
                if other.coeffs[d2].is_zero() {
                    continue;
                }
                let term = self.coeffs[d1].mul(&other.coeffs[d2]);
                out.coeffs[d1 + d2] = out.coeffs[d1 + d2].add(&term);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::build(self.order(), |d| self.coeffs[d].scale(s))
    }

    pub fn scale_ring(&self, s: &R) -> Self {
        Self::build(self.order(), |d| self.coeffs[d].mul(s))
    }

    /// q·d/dq (equivalently ∂_t with q = e^t).
    pub fn dt(&self) -> Self {
        Self::build(self.order(), |d| self.coeffs[d].scale(&crate::rat::ri(d as i64)))
    }

    /// Multiplication by q^k (high coefficients fall off the truncation).
    pub fn shift(&self, k: usize) -> Self {
        Self::build(self.order(), |d| {
            if d >= k {
                self.coeffs[d - k].clone()
            } else {
                R::zero()
            }
        })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0inv = self.coeffs[0]
            .try_inv()
            .ok_or(SeriesError::NotInvertible)?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0inv.clone();
        for d in 1..=n {
            // c0 * out_d = -Σ_{k=1..d} c_k out_{d-k}
            let mut acc = R::zero();
            for k in 1..=d {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out.coeffs[d - k]));
            }
            out.coeffs[d] = acc.neg().mul(&c0inv);
        }
        Ok(out)
    }

    /// exp(f) for f with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut out = Self::one(n);
        let mut pow = Self::one(n);
        for k in 1..=n {
            pow = pow.mul(self);
            if pow.is_zero() {
                break;
            }
            let inv_fact = Rat::new(1.into(), factorial(k as u64));
            out = out.add(&pow.scale(&inv_fact));
        }
        Ok(out)
    }

    /// log(f) for f with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order();
        let g = self.sub(&Self::one(n));
        let mut out = Self::zero(n);
        let mut pow = Self::one(n);
        for k in 1..=n {
            pow = pow.mul(&g);
            if pow.is_zero() {
                break;
            }
            let c = Rat::new(
                if k % 2 == 1 { 1.into() } else { (-1).into() },
                (k as i64).into(),
            );
            out = out.add(&pow.scale(&c));
        }
        Ok(out)
    }

    /// f^k by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    NotInvertible,
    NonzeroConstantTerm,
    ConstantTermNotOne,
    NonzeroLeadingPart(String),
    NotRegularizable(String),
    WindowExhausted(String),
}

impl std::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesError::NotInvertible => write!(f, "not invertible"),
            SeriesError::NonzeroConstantTerm => write!(f, "exp requires zero constant term"),
            SeriesError::ConstantTermNotOne => write!(f, "log requires constant term 1"),
            SeriesError::NonzeroLeadingPart(m) => {
                write!(f, "antiderivative does not vanish at -infinity: {m}")
            }
            SeriesError::NotRegularizable(m) => {
                write!(f, "not regularizable within truncation: {m}")
            }
            SeriesError::WindowExhausted(m) => write!(f, "laurent window exhausted: {m}"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Rational-coefficient series, the workhorse instantiation.
pub type RSeries = QSeries<Rat>;

impl RSeries {
    pub fn monomial(order: usize, d: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        if d <= order {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        Self::monomial(order, 0, c)
    }
}

/// Solves q = Q·exp(−τ(q)) for q(Q) by fixed-point iteration and returns
/// F(q(Q)), re-expanding a q-series in the exponentially shifted variable
/// Q = q·e^{τ(q)}. τ must have zero constant term.
pub fn revert_to_big_q(f: &RSeries, tau: &RSeries) -> Result<RSeries, SeriesError> {
    if !Ring::is_zero(tau.coeff(0)) {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let n = f.order().min(tau.order());
    let f = f.truncate(n);
    let tau = tau.truncate(n);
    // q_(k+1)(Q) = Q · exp(−τ(q_k(Q))); each pass fixes one more order.
    let mut q_of_big = RSeries::monomial(n, 1, crate::rat::ri(1));
    for _ in 0..=n {
        let tau_at = compose(&tau, &q_of_big);
        let e = tau_at.neg().exp().expect("tau has zero constant term");
        q_of_big = e.shift(1);
    }
    Ok(compose(&f, &q_of_big))
}

/// F(g(Q)) for g with zero constant term.
pub fn compose(f: &RSeries, g: &RSeries) -> RSeries {
    assert!(Ring::is_zero(g.coeff(0)), "composition needs g(0) = 0");
    let n = f.order().min(g.order());
    let mut out = RSeries::constant(n, f.coeff(0).clone());
    let mut pow = RSeries::one(n);
    for d in 1..=n {
        pow = pow.mul(g);
        if pow.is_zero() {
            break;
        }
        out = out.add(&pow.scale(f.coeff(d)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ri, rq};
    use proptest::prelude::*;

    fn qs(v: &[i64]) -> RSeries {
        RSeries::from_coeffs(v.iter().map(|&x| ri(x)).collect())
    }

    #[test]
    fn invert_identity() {
        let one = RSeries::one(4);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_geometric() {
        // 1 − 5⁵q at order 2 → 1 + 3125q + 9765625q²
        let f = qs(&[1, -3125, 0]);
        assert_eq!(f.invert().unwrap(), qs(&[1, 3125, 9765625]));
    }

    #[test]
    fn invert_zero_constant_fails() {
        let f = qs(&[0, 1, 0]);
        assert_eq!(f.invert(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn exp_of_zero_and_q() {
        assert_eq!(RSeries::zero(3).exp().unwrap(), RSeries::one(3));
        let e = qs(&[0, 1, 0, 0]).exp().unwrap();
        assert_eq!(e.coeff(0), &ri(1));
        assert_eq!(e.coeff(1), &ri(1));
        assert_eq!(e.coeff(2), &rq(1, 2));
        assert_eq!(e.coeff(3), &rq(1, 6));
    }

    #[test]
    fn log_exp_round_trip() {
        let f = qs(&[0, 1, -1, 0, 0]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn exp_requires_zero_constant() {
        assert!(qs(&[1, 1]).exp().is_err());
        assert!(qs(&[0, 1]).log().is_err());
    }

    #[test]
    fn revert_identity_map() {
        let f = qs(&[0, 1, 0, 0]);
        let tau = RSeries::zero(3);
        assert_eq!(revert_to_big_q(&f, &tau).unwrap(), f);
    }

    #[test]
    fn revert_exponential_shift() {
        // F = q, τ = q: q = Q·e^{−q(Q)} gives q = Q − Q² + (3/2)Q³.
        let f = qs(&[0, 1, 0, 0]);
        let tau = qs(&[0, 1, 0, 0]);
        let got = revert_to_big_q(&f, &tau).unwrap();
        assert_eq!(got.coeff(1), &ri(1));
        assert_eq!(got.coeff(2), &ri(-1));
        assert_eq!(got.coeff(3), &rq(3, 2));
        // back-substitution: q·e^{q} re-expanded in q(Q) must be Q
        let qe = f.mul(&tau.exp().unwrap());
        let back = compose(&qe, &got);
        assert_eq!(back, qs(&[0, 1, 0, 0]));
    }

    #[test]
    fn revert_rejects_nonzero_constant_shift() {
        let f = qs(&[0, 1]);
        let tau = qs(&[1, 1]);
        assert_eq!(
            revert_to_big_q(&f, &tau),
            Err(SeriesError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = qs(&[1, 2, 3, 4]);
        let b = qs(&[1, 1]);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b), qs(&[1, 3]));
    }

    #[test]
    fn revert_round_trip_via_inverse_substitution() {
        // swap roles of q and Q: the inverse reversion uses −τ∘q(Q)
        let f = qs(&[0, 3, 1, -2, 5, 0, 0, 0]);
        let tau = qs(&[0, 2, -1, 1, 0, 0, 0, 0]);
        let f_big = revert_to_big_q(&f, &tau).unwrap();
        // q(Q) from the same fixed point
        let q_of_big = revert_to_big_q(&qs(&[0, 1, 0, 0, 0, 0, 0, 0]), &tau).unwrap();
        let tau_inv = compose(&tau, &q_of_big).neg();
        let back = revert_to_big_q(&f_big, &tau_inv).unwrap();
        assert_eq!(back, f);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = RSeries> {
        proptest::collection::vec((-20i64..=20, 1i64..=6), order + 1).prop_map(|v| {
            RSeries::from_coeffs(v.into_iter().map(|(n, d)| rq(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_associative(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn mul_inverse(mut a in arb_series(8)) {
            if Ring::is_zero(a.coeff(0)) {
                a.set_coeff(0, ri(1));
            }
            prop_assert_eq!(a.mul(&a.invert().unwrap()), RSeries::one(8));
        }

        #[test]
        fn log_exp_identity(mut a in arb_series(8)) {
            a.set_coeff(0, ri(0));
            prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
        }

        #[test]
        fn revert_then_invert_recovers(f in arb_series(6), mut tau in arb_series(6)) {
            tau.set_coeff(0, ri(0));
            let f_big = revert_to_big_q(&f, &tau).unwrap();
            let id = RSeries::monomial(6, 1, ri(1));
            let q_of_big = revert_to_big_q(&id, &tau).unwrap();
            let tau_inv = compose(&tau, &q_of_big).neg();
            prop_assert_eq!(revert_to_big_q(&f_big, &tau_inv).unwrap(), f);
        }
    }
}
