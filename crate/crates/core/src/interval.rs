//! Enclosures of real values with exact rational endpoints.
//!
//! Rational operations (sums, products, quotients, integer powers) are
//! exact on the endpoints; the only rounding happens at n-th roots, which
//! bisect on exact rationals and round outward. Precision is an explicit
//! bisection-step count, so a higher-precision run of the same computation
//! always lands inside the lower-precision enclosure.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::exact_nth_root;

/// A closed interval `[lo, hi]` with exact rational endpoints, enclosing a
/// real value.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundInterval {
    lo: BigRational,
    hi: BigRational,
}

impl BoundInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        BoundInterval { lo, hi }
    }

    pub fn point(value: BigRational) -> Self {
        BoundInterval {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn contains(&self, value: &BigRational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        BoundInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        BoundInterval { lo, hi }
    }

    /// Division by an interval strictly above zero.
    pub fn div(&self, other: &Self) -> Self {
        assert!(
            other.lo.is_positive(),
            "interval division requires a strictly positive divisor"
        );
        let recip = BoundInterval {
            lo: BigRational::one() / &other.hi,
            hi: BigRational::one() / &other.lo,
        };
        self.mul(&recip)
    }

    pub fn pow_int(&self, e: u64) -> Self {
        let mut acc = Self::point(BigRational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Outward-rounded n-th root of a non-negative interval.
    pub fn nth_root(&self, n: u32, precision: u32) -> Self {
        assert!(!self.lo.is_negative(), "n-th root needs a non-negative interval");
        let lo = nth_root_enclosure(&self.lo, n, precision).lo;
        let hi = nth_root_enclosure(&self.hi, n, precision).hi;
        BoundInterval { lo, hi }
    }

    /// `x^(p/q)` for a non-negative interval: the q-th root of `x^p`.
    pub fn pow_ratio(&self, p: u64, q: u32, precision: u32) -> Self {
        self.pow_int(p).nth_root(q, precision)
    }

    /// Enclosure of the maximum of the two enclosed values.
    pub fn max_with(&self, other: &Self) -> Self {
        BoundInterval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }
}

impl fmt::Debug for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    num_traits::pow::pow(base.clone(), e as usize)
}

/// Enclosure of `x^(1/n)` for non-negative rational `x`: collapses to a
/// point when the root is rational, otherwise seeds an integer-root bracket
/// and bisects `precision` times (so the width shrinks by `2^-precision`
/// relative to the initial bracket, and deeper runs refine shallower ones).
pub fn nth_root_enclosure(x: &BigRational, n: u32, precision: u32) -> BoundInterval {
    assert!(n >= 1, "root order must be at least 1");
    assert!(!x.is_negative(), "n-th root needs a non-negative value");
    if x.is_zero() {
        return BoundInterval::point(BigRational::zero());
    }
    if n == 1 {
        return BoundInterval::point(x.clone());
    }
    let numer = x.numer();
    let denom = x.denom();
    if let (Some(rn), Some(rd)) = (exact_nth_root(numer, n), exact_nth_root(denom, n)) {
        return BoundInterval::point(BigRational::new(rn, rd));
    }
    let ra = numer.nth_root(n);
    let rb = denom.nth_root(n);
    let mut lo = BigRational::new(ra.clone(), &rb + BigInt::one());
    let mut hi = BigRational::new(ra + BigInt::one(), rb);
    debug_assert!(pow_rational(&lo, n) <= *x && *x <= pow_rational(&hi, n));
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..precision {
        let mid = (&lo + &hi) / &two;
        let mid_pow = pow_rational(&mid, n);
        if mid_pow == *x {
            return BoundInterval::point(mid);
        }
        if mid_pow < *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    BoundInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn interval_arithmetic() {
        let a = BoundInterval::new(q(1), q(2));
        let b = BoundInterval::new(q(3), q(4));
        assert_eq!(a.add(&b), BoundInterval::new(q(4), q(6)));
        assert_eq!(a.mul(&b), BoundInterval::new(q(3), q(8)));
        assert_eq!(b.div(&a), BoundInterval::new(qr(3, 2), q(4)));
        // Sign handling in multiplication.
        let c = BoundInterval::new(q(-2), q(3));
        assert_eq!(c.mul(&c), BoundInterval::new(q(-6), q(9)));
        assert_eq!(a.pow_int(3), BoundInterval::new(q(1), q(8)));
        assert_eq!(a.pow_int(0), BoundInterval::point(q(1)));
    }

    #[test]
    fn exact_roots_collapse() {
        let eight = nth_root_enclosure(&q(8), 3, 64);
        assert!(eight.is_point());
        assert_eq!(*eight.lo(), q(2));
        let quarter = nth_root_enclosure(&qr(1, 4), 2, 64);
        assert!(quarter.is_point());
        assert_eq!(*quarter.lo(), qr(1, 2));
    }

    #[test]
    fn sqrt2_enclosure() {
        let r = nth_root_enclosure(&q(2), 2, 64);
        assert!(pow_rational(r.lo(), 2) < q(2));
        assert!(pow_rational(r.hi(), 2) > q(2));
        assert!(r.width() < qr(1, 1_000_000_000));
    }

    #[test]
    fn precision_refines_in_place() {
        let coarse = nth_root_enclosure(&q(5), 3, 16);
        let fine = nth_root_enclosure(&q(5), 3, 64);
        assert!(coarse.contains_interval(&fine));
        assert!(fine.width() < coarse.width());
    }

    #[test]
    fn pow_ratio_covers_true_value() {
        // 2^(3/2) = √8: the enclosure must straddle it tightly.
        let x = BoundInterval::point(q(2)).pow_ratio(3, 2, 80);
        assert!(pow_rational(x.lo(), 2) < q(8));
        assert!(pow_rational(x.hi(), 2) > q(8));
        assert!(x.width() < qr(1, 1_000_000_000));
        assert!(x.contains(&qr(2_828_427_124, 1_000_000_000)) == false);
    }

    #[test]
    fn max_encloses() {
        let a = BoundInterval::new(q(1), q(3));
        let b = BoundInterval::new(q(2), q(2));
        assert_eq!(a.max_with(&b), BoundInterval::new(q(2), q(3)));
    }
}
