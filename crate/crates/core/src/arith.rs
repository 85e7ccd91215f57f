//! Small integer utilities: primality, factorization, perfect roots.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization of a u64 by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicity of `p` in `n` (`n` nonzero).
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Factorization of `|n|` by trial division up to `limit`. Returns the
/// factored part and, when the remaining cofactor exceeds `limit²` (so its
/// primality is not settled by the sieve bound), that cofactor.
pub fn factor_bigint(n: &BigInt, limit: u64) -> (BTreeMap<BigInt, u32>, Option<BigInt>) {
    let mut n = n.abs();
    let mut factors = BTreeMap::new();
    if n.is_zero() || n.is_one() {
        return (factors, None);
    }
    let mut d = 2u64;
    while d <= limit {
        let big_d = BigInt::from(d);
        if (&big_d * &big_d) > n {
            break;
        }
        loop {
            let (q, r) = n.div_rem(&big_d);
            if !r.is_zero() {
                break;
            }
            n = q;
            *factors.entry(big_d.clone()).or_insert(0) += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        (factors, None)
    } else if n <= BigInt::from(limit) * BigInt::from(limit) {
        // Cofactor below the square of the sieve bound is prime.
        *factors.entry(n).or_insert(0) += 1;
        (factors, None)
    } else {
        (factors, Some(n))
    }
}

/// Exact integer n-th root: `Some(r)` iff `r^n == x` for non-negative `x`.
pub fn exact_nth_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(n);
    if num_traits::pow::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// `n` as u64 when it fits.
pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
        let (f, rest) = factor_bigint(&BigInt::from(-20), 1000);
        assert!(rest.is_none());
        assert_eq!(f.get(&BigInt::from(2)), Some(&2));
        assert_eq!(f.get(&BigInt::from(5)), Some(&1));
    }

    #[test]
    fn valuations_and_roots() {
        assert_eq!(valuation(&BigInt::from(48), &BigInt::from(2)), 4);
        assert_eq!(valuation(&BigInt::from(48), &BigInt::from(5)), 0);
        assert_eq!(exact_nth_root(&BigInt::from(27), 3), Some(BigInt::from(3)));
        assert_eq!(exact_nth_root(&BigInt::from(28), 3), None);
    }
}
