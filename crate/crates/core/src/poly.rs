//! Univariate polynomials over the exact rationals: arithmetic, Sturm-chain
//! real-root counting, and a three-valued irreducibility test.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{exact_nth_root, factor_bigint, is_prime_u64};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    ConstantPolynomial,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ConstantPolynomial => write!(f, "polynomial must be nonconstant"),
        }
    }
}

impl core::error::Error for PolyError {}

/// A polynomial with exact rational coefficients, low degree first. The
/// zero polynomial is the empty coefficient list; trailing zeros are always
/// trimmed, so representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_integers(&[0, 1])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; `None` when the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d_deg = divisor.degree()?;
        let d_lead = divisor.leading_coeff().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while rem.len() >= divisor.coeffs.len() && !rem.is_empty() {
            let r_deg = rem.len() - 1;
            let factor = rem.last().expect("nonempty").clone() / &d_lead;
            if !factor.is_zero() {
                let shift = r_deg - d_deg;
                quot[shift] = factor.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= c * &factor;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(coeffs)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lc) => {
                let inv = BigRational::one() / lc;
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// The squarefree part `self / gcd(self, self')`, monic up to the
    /// original leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g).expect("gcd of a nonzero polynomial is nonzero");
        debug_assert!(r.is_zero());
        q
    }

    /// Clears denominators and divides by the content, returning the
    /// primitive integer coefficient list (low degree first).
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() || content.is_one() {
            return ints;
        }
        ints.iter().map(|c| c / &content).collect()
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An endpoint for real-root counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootBound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

fn sign_at(p: &RationalPoly, bound: &RootBound) -> i8 {
    match bound {
        RootBound::PosInf => p
            .leading_coeff()
            .map_or(0, |c| if c.is_positive() { 1 } else { -1 }),
        RootBound::NegInf => {
            let deg = match p.degree() {
                None => return 0,
                Some(d) => d,
            };
            let lead = p.leading_coeff().expect("nonzero");
            let mut s = if lead.is_positive() { 1 } else { -1 };
            if deg % 2 == 1 {
                s = -s;
            }
            s
        }
        RootBound::Finite(x) => {
            let v = p.eval(x);
            match v.cmp(&BigRational::zero()) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => 0,
            }
        }
    }
}

/// The Sturm chain of `p`: remainders negated, each normalized by its
/// positive leading-coefficient magnitude to keep numbers small (positive
/// scaling preserves the sign structure).
pub fn sturm_chain(p: &RationalPoly) -> Vec<RationalPoly> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2]
            .div_rem(&chain[n - 1])
            .expect("chain entries are nonzero");
        if r.is_zero() {
            break;
        }
        let neg = r.neg();
        let lc_mag = neg.leading_coeff().expect("nonzero").abs();
        let scaled = neg.scale(&(BigRational::one() / lc_mag));
        chain.push(scaled);
    }
    chain
}

fn variations(chain: &[RationalPoly], bound: &RootBound) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = sign_at(p, bound);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`, counted exactly via the Sturm chain of the squarefree part.
pub fn count_distinct_real_roots_in(p: &RationalPoly, lo: &RootBound, hi: &RootBound) -> usize {
    assert!(!p.is_zero(), "root counting needs a nonzero polynomial");
    let sf = p.squarefree_part();
    if sf.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    variations(&chain, lo) - variations(&chain, hi)
}

/// Number of distinct real roots of `p` on the whole line.
pub fn count_distinct_real_roots(p: &RationalPoly) -> usize {
    count_distinct_real_roots_in(p, &RootBound::NegInf, &RootBound::PosInf)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityResult {
    Proven,
    Reducible(RationalPoly),
    Unknown,
}

/// All positive divisors from a prime factorization.
fn divisors_from_factors(factors: &alloc::collections::BTreeMap<BigInt, u32>) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, &e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk = &pk * p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

enum RootSearch {
    Found(BigRational),
    NoneComplete,
    Incomplete,
}

/// Rational-root search on a primitive integer coefficient list.
fn rational_root_search(coeffs: &[BigInt]) -> RootSearch {
    let c0 = &coeffs[0];
    if c0.is_zero() {
        return RootSearch::Found(BigRational::zero());
    }
    let lead = coeffs.last().expect("nonconstant");
    let (f0, rest0) = factor_bigint(c0, 1_000_000);
    let (fl, restl) = factor_bigint(lead, 1_000_000);
    if rest0.is_some() || restl.is_some() {
        return RootSearch::Incomplete;
    }
    let poly = RationalPoly::from_bigints(coeffs);
    for num in divisors_from_factors(&f0) {
        for den in divisors_from_factors(&fl) {
            if num.gcd(&den) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let candidate =
                    BigRational::new(&num * BigInt::from(sign), den.clone());
                if poly.eval(&candidate).is_zero() {
                    return RootSearch::Found(candidate);
                }
            }
        }
    }
    RootSearch::NoneComplete
}

/// Degree-4 monic integer polynomials: exhaustive search for a monic
/// quadratic factor `x² + ax + b` with integer entries. Complete once
/// linear factors have been excluded, so it decides irreducibility.
fn quartic_quadratic_factor(coeffs: &[BigInt]) -> Option<IrreducibilityResult> {
    let c0 = coeffs[0].clone();
    let c1 = coeffs[1].clone();
    let c2 = coeffs[2].clone();
    let c3 = coeffs[3].clone();
    if c0.is_zero() {
        return Some(IrreducibilityResult::Reducible(RationalPoly::x()));
    }
    let (factors, rest) = factor_bigint(&c0, 1_000_000);
    if rest.is_some() {
        return None; // constant term too hard to factor; stay inconclusive here
    }
    let two = BigInt::from(2);
    for d_abs in divisors_from_factors(&factors) {
        for sign in [1i64, -1] {
            let b = &d_abs * BigInt::from(sign);
            let d = &c0 / &b;
            // a + c = c3, a·c = c2 - b - d, a·d + b·c = c1.
            let prod = &c2 - &b - &d;
            let disc = &c3 * &c3 - BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let sq = match exact_nth_root(&disc, 2) {
                Some(s) => s,
                None => continue,
            };
            for root_sign in [1i64, -1] {
                let numer = &c3 + &sq * BigInt::from(root_sign);
                if (&numer % &two).is_zero() {
                    let a = numer / &two;
                    let c = &c3 - &a;
                    if &a * &d + &b * &c == c1 {
                        let factor = RationalPoly::from_bigints(&[b.clone(), a, BigInt::one()]);
                        return Some(IrreducibilityResult::Reducible(factor));
                    }
                }
            }
        }
    }
    Some(IrreducibilityResult::Proven)
}

// ----- arithmetic of polynomials over F_p (p a small prime) -----

fn modp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn modp_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = modp_inverse(b[db], p);
    while a.len() > db {
        let da = a.len() - 1;
        let factor = (a[da] * lead_inv) % p;
        if factor != 0 {
            let shift = da - db;
            for (i, &c) in b.iter().enumerate() {
                let sub = (c * factor) % p;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop();
        modp_trim(&mut a);
    }
    a
}

fn modp_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn modp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    modp_trim(&mut prod);
    modp_rem(prod, f, p)
}

fn modp_powmod(h: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = h.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = modp_mulmod(&acc, &base, f, p);
        }
        base = modp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn modp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = modp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn modp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    modp_trim(&mut out);
    out
}

/// Rabin's irreducibility test for `f mod p` (requires `p ∤ lead`).
fn irreducible_mod_p(coeffs: &[BigInt], p: u64) -> bool {
    let big_p = BigInt::from(p);
    let f: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(&big_p);
            crate::arith::to_u64(&r).expect("residue fits in u64")
        })
        .collect();
    let d = f.len() - 1;
    if f[d] == 0 || d < 1 {
        return false;
    }
    let x = vec![0u64, 1];
    // x^(p^k) mod f for k = 1..d via iterated p-th powers.
    let mut frob = vec![x.clone()];
    for _ in 1..=d {
        let prev = frob.last().expect("seeded");
        frob.push(modp_powmod(prev, p, &f, p));
    }
    // x^(p^d) must reduce to x.
    if frob[d] != x {
        return false;
    }
    for (q, _) in crate::arith::factor_u64(d as u64) {
        let k = d / q as usize;
        let diff = modp_sub(&frob[k], &x, p);
        let g = modp_gcd(f.clone(), diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Three-valued irreducibility over the rationals. `Proven` comes from
/// rational-root exclusion (degree ≤ 3), an exhaustive quadratic-factor
/// search (monic degree 4), or irreducibility modulo some prime ≤ 100;
/// `Reducible` always carries a witness factor.
pub fn irreducibility(f: &RationalPoly) -> Result<IrreducibilityResult, PolyError> {
    let deg = match f.degree() {
        None | Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(d) => d,
    };
    if deg == 1 {
        return Ok(IrreducibilityResult::Proven);
    }
    let ints = f.primitive_integer_coeffs();
    let root_status = rational_root_search(&ints);
    match root_status {
        RootSearch::Found(r) => {
            let witness = RationalPoly::new(vec![-r, BigRational::one()]);
            return Ok(IrreducibilityResult::Reducible(witness));
        }
        RootSearch::NoneComplete => {
            if deg <= 3 {
                return Ok(IrreducibilityResult::Proven);
            }
        }
        RootSearch::Incomplete => {
            if deg <= 3 {
                return Ok(IrreducibilityResult::Unknown);
            }
        }
    }
    if deg == 4 && ints.last().map_or(false, |l| l.abs().is_one()) {
        if let Some(result) = quartic_quadratic_factor(&ints) {
            return Ok(result);
        }
    }
    let lead = ints.last().expect("nonconstant");
    for p in (2..=100u64).filter(|&p| is_prime_u64(p)) {
        if (lead % BigInt::from(p)).is_zero() {
            continue;
        }
        if irreducible_mod_p(&ints, p) {
            return Ok(IrreducibilityResult::Proven);
        }
    }
    Ok(IrreducibilityResult::Unknown)
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
    fn arithmetic_basics() {
        let f = RationalPoly::from_integers(&[-2, 0, 1]); // x^2 - 2
        let g = RationalPoly::from_integers(&[1, 1]); // x + 1
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.eval(&q(3)), q(7));
        let prod = f.mul(&g);
        assert_eq!(prod, RationalPoly::from_integers(&[-2, -2, 1, 1]));
        let (quot, rem) = prod.div_rem(&g).unwrap();
        assert_eq!(quot, f);
        assert!(rem.is_zero());
        assert_eq!(f.derivative(), RationalPoly::from_integers(&[0, 2]));
    }

    #[test]
    fn display_formatting() {
        let f = RationalPoly::from_integers(&[-2, 0, 1]);
        assert_eq!(alloc::format!("{f}"), "x^2 - 2");
        let g = RationalPoly::new(vec![qr(1, 2), q(0), q(-3)]);
        assert_eq!(alloc::format!("{g}"), "-3x^2 + 1/2");
        assert_eq!(alloc::format!("{}", RationalPoly::zero()), "0");
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = RationalPoly::from_integers(&[-1, 0, 1]); // (x-1)(x+1)
        let g = RationalPoly::from_integers(&[-1, 1]); // x - 1
        let gg = f.gcd(&g.mul(&g));
        assert_eq!(gg, g);
        let sq = g.mul(&g).mul(&RationalPoly::from_integers(&[1, 1]));
        let sf = sq.squarefree_part();
        assert_eq!(sf.degree(), Some(2));
        assert_eq!(count_distinct_real_roots(&sq), 2);
    }

    #[test]
    fn sturm_counts() {
        let f = RationalPoly::from_integers(&[-2, 0, 1]); // roots ±√2
        assert_eq!(count_distinct_real_roots(&f), 2);
        let g = RationalPoly::from_integers(&[1, 0, 1]); // x² + 1
        assert_eq!(count_distinct_real_roots(&g), 0);
        let h = RationalPoly::from_integers(&[-7, 1]); // x - 7
        assert_eq!(count_distinct_real_roots(&h), 1);
        // Roots in (0, ∞): only +√2.
        assert_eq!(
            count_distinct_real_roots_in(
                &f,
                &RootBound::Finite(BigRational::zero()),
                &RootBound::PosInf
            ),
            1
        );
        // Half-open: root at the left endpoint is excluded, at the right
        // endpoint included.
        let lin = RationalPoly::from_integers(&[0, 1]); // root 0
        assert_eq!(
            count_distinct_real_roots_in(
                &lin,
                &RootBound::Finite(BigRational::zero()),
                &RootBound::PosInf
            ),
            0
        );
        assert_eq!(
            count_distinct_real_roots_in(
                &lin,
                &RootBound::NegInf,
                &RootBound::Finite(BigRational::zero())
            ),
            1
        );
        // x³ - 3x - 1 is totally real (three real roots).
        let cubic = RationalPoly::from_integers(&[-1, -3, 0, 1]);
        assert_eq!(count_distinct_real_roots(&cubic), 3);
    }

    #[test]
    fn irreducibility_examples() {
        let f = RationalPoly::from_integers(&[-2, 0, 1]);
        assert_eq!(irreducibility(&f).unwrap(), IrreducibilityResult::Proven);

        let g = RationalPoly::from_integers(&[-1, 0, 1]); // x² - 1
        match irreducibility(&g).unwrap() {
            IrreducibilityResult::Reducible(w) => {
                // witness is x - 1 or x + 1
                assert_eq!(w.degree(), Some(1));
                let root = -w.coeff(0);
                assert!(g.eval(&root).is_zero());
            }
            other => panic!("expected Reducible, got {other:?}"),
        }

        // x⁴ + 1 is reducible mod every prime but the quadratic-factor
        // search settles it.
        let h = RationalPoly::from_integers(&[1, 0, 0, 0, 1]);
        assert_eq!(irreducibility(&h).unwrap(), IrreducibilityResult::Proven);

        // x⁴ + 4 = (x² + 2x + 2)(x² - 2x + 2).
        let r = RationalPoly::from_integers(&[4, 0, 0, 0, 1]);
        match irreducibility(&r).unwrap() {
            IrreducibilityResult::Reducible(w) => {
                let (_, rem) = r.div_rem(&w).unwrap();
                assert!(rem.is_zero());
            }
            other => panic!("expected Reducible, got {other:?}"),
        }

        let constant = RationalPoly::from_integers(&[5]);
        assert!(irreducibility(&constant).is_err());

        // Degree 5, irreducible mod 2: x⁵ + x² + 1.
        let quintic = RationalPoly::from_integers(&[1, 0, 1, 0, 0, 1]);
        assert_eq!(irreducibility(&quintic).unwrap(), IrreducibilityResult::Proven);

        // x³ - 3x - 1 (no rational roots).
        let cubic = RationalPoly::from_integers(&[-1, -3, 0, 1]);
        assert_eq!(irreducibility(&cubic).unwrap(), IrreducibilityResult::Proven);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // 2x² - 3x + 1 = (2x - 1)(x - 1): root 1/2.
        let f = RationalPoly::from_integers(&[1, -3, 2]);
        match irreducibility(&f).unwrap() {
            IrreducibilityResult::Reducible(w) => {
                let root = -w.coeff(0);
                assert!(f.eval(&root).is_zero());
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn primitive_integer_normalization() {
        let f = RationalPoly::new(vec![qr(1, 2), qr(3, 4)]); // (2 + 3x)/4
        assert_eq!(
            f.primitive_integer_coeffs(),
            vec![BigInt::from(2), BigInt::from(3)]
        );
    }
}
