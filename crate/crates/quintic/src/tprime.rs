//! Polynomials in the auxiliary equivariant variable t′, truncated at degree 3.
//!
//! Every computation downstream needs t′-degree ≤ 2; degree 3 is retained
//! as a guard band so that a degree-3 term produced by a product is seen
//! rather than silently dropped.

use crate::qseries::Ring;
use crate::rat::Rat;

pub const TDEG: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct TPrimePoly<R: Ring> {
    pub c: [R; TDEG],
}

impl<R: Ring> TPrimePoly<R> {
    pub fn from_parts(c: [R; TDEG]) -> Self {
        Self { c }
    }

    pub fn constant(r: R) -> Self {
        Self {
            c: [r, R::zero(), R::zero(), R::zero()],
        }
    }

    /// Coefficient of (t′)^k.
    pub fn part(&self, k: usize) -> &R {
        &self.c[k]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TPrimePoly<S> {
        TPrimePoly {
            c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])],
        }
    }
}

impl<R: Ring> Ring for TPrimePoly<R> {
    fn zero() -> Self {
        Self::constant(R::zero())
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].add(&other.c[i])),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].sub(&other.c[i])),
        }
    }
    fn neg(&self) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].neg()),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..TDEG {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..TDEG - i {
                if other.c[j].is_zero() {
                    continue;
                }
                out.c[i + j] = out.c[i + j].add(&self.c[i].mul(&other.c[j]));
            }
        }
        out
    }
    fn scale(&self, s: &Rat) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].scale(s)),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        // (c0 + u)⁻¹ = c0⁻¹ Σ (−u/c0)^k, truncated at degree 3
        let c0inv = self.c[0].try_inv()?;
        let mut u = self.clone();
        u.c[0] = R::zero();
        let mut out = Self::constant(c0inv.clone());
        let mut pow = Self::one();
        let scaled = u.map(|x| x.mul(&c0inv).neg());
        for _ in 1..TDEG {
            pow = pow.mul(&scaled);
            out = out.add(&pow.map(|x| x.mul(&c0inv)));
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ri, Rat};

    fn tp(v: [i64; 4]) -> TPrimePoly<Rat> {
        TPrimePoly::from_parts([ri(v[0]), ri(v[1]), ri(v[2]), ri(v[3])])
    }

    #[test]
    fn truncated_product() {
        let a = tp([1, 1, 0, 0]);
        let b = tp([1, 0, 1, 0]);
        // (1+x)(1+x²) = 1 + x + x² + x³
        assert_eq!(a.mul(&b), tp([1, 1, 1, 1]));
        // degree ≥ 4 terms are discarded
        let c = tp([0, 0, 1, 1]);
        assert_eq!(c.mul(&c), tp([0, 0, 0, 0]));
    }

    #[test]
    fn inverse() {
        let a = tp([2, 3, -1, 4]);
        let inv = a.try_inv().unwrap();
        assert_eq!(a.mul(&inv), TPrimePoly::one());
    }
}
