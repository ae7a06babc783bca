//! Polynomials in t with q-series coefficients, where q = e^t.
//!
//! This is the natural home of the hypergeometric period functions: t-degree
//! grows under multiplication (up to a configurable cap) and ∂_t mixes the
//! polynomial and exponential directions. The boundary-conditioned
//! antiderivative `dt_inv` inverts ∂_t with the normalization that the
//! result vanishes as t → −∞; a nonzero q⁰ part of the integrand has no
//! such antiderivative and is rejected.

use crate::qseries::{RSeries, Ring, SeriesError};
use crate::rat::{rat_zero, ri, Rat};


/// Hard cap on the t-degree; identities in this crate stay well below it.
pub const DEFAULT_TDEG_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct LogSeries {
    /// `parts[j]` is the q-series coefficient of t^j.
    parts: Vec<RSeries>,
}

impl LogSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            parts: vec![RSeries::zero(order)],
        }
    }

    pub fn from_parts(parts: Vec<RSeries>) -> Self {
        assert!(!parts.is_empty());
        let mut s = Self { parts };
        s.trim();
        s
    }

    /// Embeds a pure q-series (t-degree zero).
    pub fn pure(f: RSeries) -> Self {
        Self { parts: vec![f] }
    }

    /// The monomial t (coefficient 1, any q-order n).
    pub fn t(order: usize) -> Self {
        Self {
            parts: vec![RSeries::zero(order), RSeries::one(order)],
        }
    }

    fn trim(&mut self) {
        while self.parts.len() > 1 && self.parts.last().unwrap().is_zero() {
            self.parts.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.parts[0].order()
    }

    /// Largest t-exponent carried (trailing zero parts trimmed).
    pub fn tdeg(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, j: usize) -> RSeries {
        if j < self.parts.len() {
            self.parts[j].clone()
        } else {
            RSeries::zero(self.order())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    /// The t-degree-0 slice when all higher slices vanish.
    pub fn pure_part(&self) -> Result<RSeries, SeriesError> {
        for j in 1..self.parts.len() {
            if !self.parts[j].is_zero() {
                return Err(SeriesError::NonzeroLeadingPart(format!(
                    "t-degree {j} part is nonzero"
                )));
            }
        }
        Ok(self.parts[0].clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_parts(self.parts.iter().map(|p| p.truncate(order)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let deg = self.tdeg().max(other.tdeg());
        Self::from_parts(
            (0..=deg)
                .map(|j| self.part(j).truncate(n).add(&other.part(j).truncate(n)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(self.parts.iter().map(|p| p.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let deg = self.tdeg() + other.tdeg();
        assert!(
            deg <= DEFAULT_TDEG_CAP,
            "t-degree {deg} exceeds cap {DEFAULT_TDEG_CAP}"
        );
        let mut parts = vec![RSeries::zero(n); deg + 1];
        for (i, a) in self.parts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.parts.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                parts[i + j] = parts[i + j].add(&a.truncate(n).mul(&b.truncate(n)));
            }
        }
        Self::from_parts(parts)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_parts(self.parts.iter().map(|p| p.scale(s)).collect())
    }

    /// Multiplication by a pure q-series.
    pub fn scale_series(&self, f: &RSeries) -> Self {
        let n = self.order().min(f.order());
        Self::from_parts(self.parts.iter().map(|p| p.truncate(n).mul(f)).collect())
    }

    /// Multiplication by t.
    pub fn mul_t(&self) -> Self {
        let mut parts = vec![RSeries::zero(self.order())];
        parts.extend(self.parts.iter().cloned());
        Self::from_parts(parts)
    }

    /// ∂_t, acting as ∂_t(t^j q^d) = j t^{j−1} q^d + d t^j q^d.
    pub fn dt(&self) -> Self {
        let deg = self.tdeg();
        Self::from_parts(
            (0..=deg)
                .map(|j| {
                    let mut p = self.parts[j].dt();
                    if j < deg {
                        p = p.add(&self.parts[j + 1].scale(&ri(j as i64 + 1)));
                    }
                    p
                })
                .collect(),
        )
    }

    pub fn dt_n(&self, n: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.dt();
        }
        out
    }

    /// The antiderivative vanishing as t → −∞.
    ///
    /// Errors when any t^j q⁰ coefficient of the integrand is nonzero: a
    /// pure t-polynomial has no antiderivative with that boundary behavior.
    pub fn dt_inv(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        let deg = self.tdeg();
        for j in 0..=deg {
            if !self.parts[j].coeff(0).is_zero() {
                return Err(SeriesError::NonzeroLeadingPart(format!(
                    "integrand has q^0 t^{j} coefficient {}",
                    crate::rat::rat_str(self.parts[j].coeff(0))
                )));
            }
        }
        // Per q-degree d ≥ 1 solve (d + ∂_t) r_d(t) = f_d(t) top-down in t.
        let mut parts = vec![RSeries::zero(n); deg + 1];
        for d in 1..=n {
            let dd = ri(d as i64);
            let mut carried = rat_zero(); // (j+1)·b_{j+1}
            for j in (0..=deg).rev() {
                let a = self.parts[j].coeff(d).clone();
                let b = (a - &carried) / &dd;
                parts[j].set_coeff(d, b.clone());
                carried = b * ri(j as i64);
            }
        }
        Ok(Self::from_parts(parts))
    }

    /// Substitutes the formal symbol u with k-th coefficient weights:
    /// Σ_k coeffs\[k\]·u^k is evaluated at u = `value` (used for integrals
    /// whose integrand holds the outer mirror coordinate fixed).
    pub fn eval_poly(coeffs: &[LogSeries], value: &LogSeries) -> LogSeries {
        let mut out = LogSeries::zero(value.order().min(coeffs[0].order()));
        let mut pow = LogSeries::pure(RSeries::one(out.order()));
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                pow = pow.mul(value);
            }
            out = out.add(&c.mul(&pow));
        }
        out
    }
}
