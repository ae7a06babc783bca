//! Exact rational scalars.
//!
//! Every coefficient in this crate is a `Rat`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator (both
//! invariants are maintained by `num-rational`). No floating point
//! appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial C(n, k) for integer n (possibly negative), k ≥ 0.
///
/// Uses the falling-factorial definition n(n−1)⋯(n−k+1)/k!, which is the
/// form needed when expanding (1+x)^n for negative n.
pub fn binomial(n: i64, k: u64) -> Rat {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
    }
    Rat::new(num, factorial(k))
}

/// Renders a rational as `num` or `num/den`, the exact wire format used
/// by the CLI output modes.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Harmonic number H_n = Σ_{m=1..n} 1/m.
pub fn harmonic(n: u64) -> Rat {
    let mut acc = Rat::zero();
    for m in 1..=n {
        acc += Rat::new(BigInt::one(), BigInt::from(m));
    }
    acc
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

/// r^p for a non-negative integer power.
pub fn rat_pow(r: &Rat, p: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..p {
        acc *= r;
    }
    acc
}
