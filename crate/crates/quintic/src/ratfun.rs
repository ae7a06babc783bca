//! Rational functions of α = 5⁵q, with the derivation ∂_t = α·d/dα.
//!
//! The degree-one relations among the normalized Picard-Fuchs coefficients
//! are rational-function identities in α, not merely truncated series
//! facts; checking them here upgrades those checks to proof strength
//! (polynomial residual after clearing denominators).

use crate::qseries::{RSeries, Ring};
use crate::rat::{rat_zero, ri, Rat};


/// Dense polynomial over ℚ in ascending powers of α.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub c: Vec<Rat>,
}

impl Poly {
    pub fn new(c: Vec<Rat>) -> Self {
        let mut p = Self { c };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { c: vec![] }
    }

    pub fn constant(r: Rat) -> Self {
        Self::new(vec![r])
    }

    pub fn alpha() -> Self {
        Self::new(vec![rat_zero(), ri(1)])
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.c.get(i).cloned().unwrap_or_else(Rat::zero);
                    let b = o.c.get(i).cloned().unwrap_or_else(Rat::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![rat_zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    /// d/dα.
    pub fn d_alpha(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            (1..self.c.len())
                .map(|i| &self.c[i] * ri(i as i64))
                .collect(),
        )
    }
}

/// num/den with exact arithmetic; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFun {
    pub num: Poly,
    pub den: Poly,
}

impl RatFun {
    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::constant(ri(1)),
        }
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    /// C = α/(1−α).
    pub fn c_gen() -> Self {
        Self {
            num: Poly::alpha(),
            den: Poly::constant(ri(1)).sub(&Poly::alpha()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self {
            num: self.num.mul(&Poly::constant(s.clone())),
            den: self.den.clone(),
        }
    }

    /// ∂_t = α d/dα (since α = 5⁵e^t).
    pub fn dt(&self) -> Self {
        let a = Poly::alpha();
        // (n/d)' = (n'd − nd')/d² times α
        let num = self
            .num
            .d_alpha()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.d_alpha()))
            .mul(&a);
        Self {
            num,
            den: self.den.mul(&self.den),
        }
    }

    /// Exact equality: num₁·den₂ = num₂·den₁ as polynomials.
    pub fn equivalent(&self, o: &Self) -> bool {
        self.num.mul(&o.den).sub(&o.num.mul(&self.den)).is_zero()
    }

    /// Power-series expansion in q (α = 5⁵q) to the given order.
    pub fn expand(&self, order: usize) -> RSeries {
        let sub = |p: &Poly| -> RSeries {
            let mut s = RSeries::zero(order);
            let mut apow = RSeries::one(order);
            let alpha = RSeries::monomial(order, 1, ri(3125));
            for (i, c) in p.c.iter().enumerate() {
                if i > 0 {
                    apow = apow.mul(&alpha);
                }
                s = s.add(&apow.scale(c));
            }
            s
        };
        sub(&self.num)
            .mul(&sub(&self.den).invert().expect("denominator unit at q=0"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rq;

    #[test]
    fn c_satisfies_logistic_ode() {
        // C′ = C² + C as rational functions
        let c = RatFun::c_gen();
        assert!(c.dt().equivalent(&c.mul(&c).add(&c)));
    }

    #[test]
    fn expansion_matches_geometric() {
        let c = RatFun::c_gen();
        let s = c.expand(3);
        assert_eq!(s.coeff(1), &ri(3125));
        assert_eq!(s.coeff(2), &ri(3125 * 3125));
    }

    #[test]
    fn equality_is_cross_multiplied() {
        // α/(1−α) == α(1+α)/((1−α)(1+α))
        let c = RatFun::c_gen();
        let one_plus = Poly::constant(ri(1)).add(&Poly::alpha());
        let c2 = RatFun {
            num: Poly::alpha().mul(&one_plus),
            den: Poly::constant(ri(1)).sub(&Poly::alpha()).mul(&one_plus),
        };
        assert!(c.equivalent(&c2));
        assert!(!c.equivalent(&RatFun::constant(rq(1, 2))));
    }
}
