//! Truncated Laurent series in ℏ with exact pole order.
//!
//! Coefficients below the stored support are known to be zero exactly
//! (pole order is never truncated from below), while coefficients above
//! the validity bound `hi` are unknown. Multiplication propagates the
//! sound bound hi = min(hi₁ + lo₂, hi₂ + lo₁): a product coefficient at
//! exponent e is exact iff every contributing pair lies inside both
//! operands' windows.

use crate::qseries::Ring;
use crate::rat::{rat_zero, Rat};


/// Sentinel for "valid at every exponent" (exactly-known series).
pub const HI_INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
pub struct HLaurent {
    /// Exponent of the first stored coefficient; everything below is zero.
    lo: i64,
    /// Largest exponent whose coefficient is known exactly.
    hi: i64,
    /// Coefficients of ℏ^lo, ℏ^{lo+1}, …  (may stop before `hi`; the gap is zero).
    coeffs: Vec<Rat>,
}

impl PartialEq for HLaurent {
    /// Observational equality: all coefficients agree on the common
    /// validity range (beyond both stored supports everything is zero).
    fn eq(&self, other: &Self) -> bool {
        let hi = self.hi.min(other.hi);
        let lo = self.lo.min(other.lo);
        let top = hi.min(lo + (self.coeffs.len() + other.coeffs.len()) as i64 + 1);
        for e in lo..=top {
            if self.coeff(e) != other.coeff(e) {
                return false;
            }
        }
        true
    }
}

impl HLaurent {
    pub fn new(lo: i64, hi: i64, coeffs: Vec<Rat>) -> Self {
        let mut s = Self { lo, hi, coeffs };
        s.normalize();
        s
    }

    /// The zero series, valid everywhere.
    pub fn zero_inf() -> Self {
        Self {
            lo: 0,
            hi: HI_INF,
            coeffs: Vec::new(),
        }
    }

    /// c·ℏ^e as an exactly-known series.
    pub fn monomial(e: i64, c: Rat) -> Self {
        Self::new(e, HI_INF, vec![c])
    }

    pub fn one_inf() -> Self {
        Self::monomial(0, crate::rat::rat_one())
    }

    fn normalize(&mut self) {
        while let Some(first) = self.coeffs.first() {
            if first.is_zero() {
                self.coeffs.remove(0);
                self.lo += 1;
            } else {
                break;
            }
        }
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        } else {
            // stored support must not exceed the validity bound
            debug_assert!(self.lo + self.coeffs.len() as i64 - 1 <= self.hi);
        }
    }

    /// Lowest exponent with a (possibly) nonzero coefficient.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Validity bound: coefficients above this are unknown.
    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the pole at ℏ = 0 (0 when regular or zero).
    pub fn pole_order(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            (-self.lo).max(0)
        }
    }

    /// Coefficient of ℏ^e. Panics when e exceeds the validity bound.
    pub fn coeff(&self, e: i64) -> Rat {
        assert!(
            e <= self.hi,
            "coefficient of h^{e} requested beyond validity bound {}",
            self.hi
        );
        if e < self.lo || e >= self.lo + self.coeffs.len() as i64 {
            rat_zero()
        } else {
            self.coeffs[(e - self.lo) as usize].clone()
        }
    }

    /// Coefficient of ℏ^{−1}.
    pub fn residue(&self) -> Rat {
        if self.coeffs.is_empty() {
            return rat_zero();
        }
        if self.lo > -1 {
            return rat_zero();
        }
        self.coeff(-1)
    }

    /// Drops validity above `hi` (window truncation; never touches poles).
    pub fn truncate_hi(&self, hi: i64) -> Self {
        let hi = hi.min(self.hi);
        let keep = ((hi - self.lo + 1).max(0) as usize).min(self.coeffs.len());
        Self::new(self.lo, hi, self.coeffs[..keep].to_vec())
    }

    /// Multiplication by ℏ^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return Self {
                lo: 0,
                hi: self.hi.saturating_add(k).min(HI_INF),
                coeffs: Vec::new(),
            };
        }
        Self {
            lo: self.lo + k,
            hi: if self.hi >= HI_INF { HI_INF } else { self.hi + k },
            coeffs: self.coeffs.clone(),
        }
    }

    /// Expansion of c/(a + bℏ)^p around ℏ = 0 (a ≠ 0), exact to `hi`.
    pub fn expand_inv_linear(c: &Rat, a: &Rat, b: &Rat, p: u32, hi: i64) -> Self {
        assert!(!a.is_zero());
        // (a + bℏ)^{-p} = a^{-p} Σ_k C(-p, k) (b/a)^k ℏ^k
        let mut coeffs = Vec::new();
        let ratio = b / a;
        let mut apow = c / crate::rat::rat_pow(a, p);
        for k in 0..=hi.max(0) {
            coeffs.push(&apow * &crate::rat::binomial(-(p as i64), k as u64));
            apow *= &ratio;
        }
        Self::new(0, hi, coeffs)
    }
}

impl Ring for HLaurent {
    fn zero() -> Self {
        Self::zero_inf()
    }
    fn one() -> Self {
        Self::one_inf()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let hi = self.hi.min(other.hi);
        if self.coeffs.is_empty() {
            return other.truncate_hi(hi);
        }
        if other.coeffs.is_empty() {
            return self.truncate_hi(hi);
        }
        let lo = self.lo.min(other.lo);
        let top = (self.lo + self.coeffs.len() as i64 - 1)
            .max(other.lo + other.coeffs.len() as i64 - 1)
            .min(hi);
        if top < lo {
            return Self {
                lo: 0,
                hi,
                coeffs: Vec::new(),
            };
        }
        let coeffs = (lo..=top)
            .map(|e| {
                let a = if e <= self.hi { self.coeff(e) } else { rat_zero() };
                let b = if e <= other.hi { other.coeff(e) } else { rat_zero() };
                a + b
            })
            .collect();
        Self::new(lo, hi, coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn neg(&self) -> Self {
        Self {
            lo: self.lo,
            hi: self.hi,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            let hi = if self.coeffs.is_empty() {
                self.hi.saturating_add(other.lo)
            } else {
                other.hi.saturating_add(self.lo)
            };
            return Self {
                lo: 0,
                hi: hi.min(HI_INF),
                coeffs: Vec::new(),
            };
        }
        let hi = self
            .hi
            .saturating_add(other.lo)
            .min(other.hi.saturating_add(self.lo))
            .min(HI_INF);
        let lo = self.lo + other.lo;
        if hi < lo {
            return Self {
                lo: 0,
                hi,
                coeffs: Vec::new(),
            };
        }
        let len = ((hi - lo + 1) as usize).min(self.coeffs.len() + other.coeffs.len() - 1);
        let mut coeffs = vec![rat_zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::new(lo, hi, coeffs)
    }

    fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self {
                lo: 0,
                hi: self.hi,
                coeffs: Vec::new(),
            };
        }
        Self {
            lo: self.lo,
            hi: self.hi,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        // f = c·ℏ^lo (1 + g): invert the unit part by geometric expansion.
        let c = self.coeffs[0].clone();
        let hi = if self.hi >= HI_INF {
            HI_INF
        } else {
            self.hi - 2 * self.lo
        };
        let rel_len = if self.hi >= HI_INF {
            self.coeffs.len()
        } else {
            ((self.hi - self.lo + 1).max(0) as usize).max(self.coeffs.len())
        };
        // relative power series u with u_0 = 1
        let mut u = vec![rat_zero(); rel_len];
        for (i, a) in self.coeffs.iter().enumerate() {
            u[i] = a / &c;
        }
        let mut inv = vec![rat_zero(); rel_len];
        inv[0] = Rat::new(1.into(), 1.into()) / &c;
        for k in 1..rel_len {
            let mut acc = rat_zero();
            for j in 1..=k {
                if !u[j].is_zero() {
                    acc += &u[j] * &inv[k - j];
                }
            }
            inv[k] = -acc;
        }
        Some(Self::new(-self.lo, hi, inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ri, rq};

    fn hl(lo: i64, v: &[i64]) -> HLaurent {
        HLaurent::new(lo, HI_INF, v.iter().map(|&x| ri(x)).collect())
    }

    #[test]
    fn residues() {
        assert_eq!(hl(-1, &[1]).residue(), ri(1)); // 1/ℏ
        assert_eq!(hl(0, &[1, 1]).residue(), ri(0)); // 1 + ℏ
        let f = HLaurent::new(-2, HI_INF, vec![ri(5), rq(3, 2)]); // 5/ℏ² + 3/(2ℏ)
        assert_eq!(f.residue(), rq(3, 2));
    }

    #[test]
    fn pole_order_is_exact_under_mul() {
        let a = hl(-2, &[1, 0, 3]);
        let b = hl(-3, &[2, 1]);
        let p = a.mul(&b);
        assert_eq!(p.lo(), -5);
        assert_eq!(p.coeff(-5), ri(2));
        assert!(p.pole_order() <= a.pole_order() + b.pole_order());
    }

    #[test]
    fn validity_bound_under_mul() {
        let a = HLaurent::new(-1, 3, vec![ri(1), ri(1), ri(1), ri(1), ri(1)]);
        let b = HLaurent::new(-2, 5, vec![ri(1), ri(2)]);
        let p = a.mul(&b);
        // hi = min(3 + (−2), 5 + (−1)) = 1
        assert_eq!(p.hi(), 1);
        assert_eq!(p.coeff(-3), ri(1));
    }

    #[test]
    fn inverse_round_trip() {
        let a = HLaurent::new(-1, 6, vec![ri(2), ri(1), ri(-3), ri(1), ri(0), ri(4), ri(1), ri(2)]);
        let inv = a.try_inv().unwrap();
        let p = a.mul(&inv);
        for e in p.lo()..=p.hi() {
            assert_eq!(p.coeff(e), if e == 0 { ri(1) } else { ri(0) });
        }
    }

    #[test]
    fn pole_order_never_truncated_from_below() {
        use proptest::prelude::*;
        let strat = (
            -4i64..=2,
            proptest::collection::vec(-9i64..=9, 1..6),
            -4i64..=2,
            proptest::collection::vec(-9i64..=9, 1..6),
        );
        let mut runner = proptest::test_runner::TestRunner::default();
        runner
            .run(&strat, |(lo1, v1, lo2, v2)| {
                let a = HLaurent::new(lo1, 8, v1.iter().map(|&x| ri(x)).collect());
                let b = HLaurent::new(lo2, 8, v2.iter().map(|&x| ri(x)).collect());
                let p = a.mul(&b);
                prop_assert!(p.pole_order() <= a.pole_order() + b.pole_order());
                // the leading product coefficient is exact
                if !a.is_zero() && !b.is_zero() {
                    prop_assert_eq!(
                        p.coeff(a.lo() + b.lo()),
                        a.coeff(a.lo()) * b.coeff(b.lo())
                    );
                }
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn expand_inv_linear_matches_geometric() {
        // 1/(1 + ℏ) = 1 − ℏ + ℏ² − …
        let f = HLaurent::expand_inv_linear(&ri(1), &ri(1), &ri(1), 1, 5);
        assert_eq!(f.coeff(0), ri(1));
        assert_eq!(f.coeff(3), ri(-1));
        // 1/(1 + ℏ)² via p = 2
        let g = HLaurent::expand_inv_linear(&ri(1), &ri(1), &ri(1), 2, 5);
        assert_eq!(g.coeff(2), ri(3));
        assert_eq!(g, f.mul(&f).truncate_hi(5));
    }
}
