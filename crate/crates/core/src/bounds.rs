//! The quantitative layer: the degree-n trace constant `c_n`, the maximal
//! pair trace `T`, the certified discriminant threshold `C(L, k)`, and the
//! two inequality verifiers backing it.
//!
//! All thresholds come out as [`BoundInterval`] enclosures whose upper
//! endpoint is a sound bound: rational steps are exact and only root
//! extraction rounds, always outward.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::interval::{nth_root_enclosure, BoundInterval};
use crate::numberfield::{check_succeq, AlgebraicNumber, FieldError, NumberField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundsError {
    BadDegree(u64),
    NeedTwoElements,
    /// Index of the offending element.
    NotTotallyPositive(usize),
    FieldMismatch,
    FieldNotTotallyReal,
    Field(FieldError),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::BadDegree(n) => write!(f, "degree {n} is out of range (need ≥ 2)"),
            BoundsError::NeedTwoElements => {
                write!(f, "at least two elements are required (the maximum runs over pairs)")
            }
            BoundsError::NotTotallyPositive(i) => {
                write!(f, "element {i} is not totally positive")
            }
            BoundsError::FieldMismatch => write!(f, "elements belong to different fields"),
            BoundsError::FieldNotTotallyReal => write!(f, "field is not totally real"),
            BoundsError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BoundsError {}

impl From<FieldError> for BoundsError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::FieldNotTotallyReal => BoundsError::FieldNotTotallyReal,
            FieldError::FieldMismatch => BoundsError::FieldMismatch,
            other => BoundsError::Field(other),
        }
    }
}

/// `c_n = (n² - n) / (1¹·2²⋯n^n)^(2/(n²-n))` for `n ≥ 2`. The exponent is
/// `1/m` with `m = (n²-n)/2`, so the enclosure collapses to an exact
/// rational whenever the hyperfactorial is a perfect m-th power (as at
/// `n = 2`, where `c_2 = 1/2`).
pub fn schur_constant(n: u32, precision: u32) -> Result<BoundInterval, BoundsError> {
    if n < 2 {
        return Err(BoundsError::BadDegree(n as u64));
    }
    let nn = n as u64;
    let numerator = BigRational::from_integer(BigInt::from(nn * nn - nn));
    let mut hyperfactorial = BigInt::one();
    for i in 1..=n {
        hyperfactorial *= num_traits::pow::pow(BigInt::from(i), i as usize);
    }
    let m: u32 = ((nn * nn - nn) / 2)
        .try_into()
        .map_err(|_| BoundsError::BadDegree(nn))?;
    let root = nth_root_enclosure(&BigRational::from_integer(hyperfactorial), m, precision);
    Ok(BoundInterval::point(numerator).div(&root))
}

/// `T = max over pairs i < j of Tr(4·a_i·a_j)`, exact. All elements must be
/// totally positive and at least two are required (the maximum is over the
/// strictly upper triangle; the diagonal is excluded by definition).
pub fn big_t(a_list: &[AlgebraicNumber]) -> Result<BigRational, BoundsError> {
    if a_list.len() < 2 {
        return Err(BoundsError::NeedTwoElements);
    }
    let field = a_list[0].field();
    for a in a_list.iter().skip(1) {
        if a.field() != field {
            return Err(BoundsError::FieldMismatch);
        }
    }
    for (i, a) in a_list.iter().enumerate() {
        if !a.is_totally_positive()? {
            return Err(BoundsError::NotTotallyPositive(i));
        }
    }
    let four = BigRational::from_integer(BigInt::from(4));
    let mut best: Option<BigRational> = None;
    for i in 0..a_list.len() {
        for j in i + 1..a_list.len() {
            let value = a_list[i].mul(&a_list[j]).trace() * &four;
            best = Some(match best {
                None => value,
                Some(b) => b.max(value),
            });
        }
    }
    Ok(best.expect("at least one pair"))
}

/// One divisor's contribution to the threshold.
#[derive(Clone, Debug)]
pub struct DivisorTerm {
    pub e: u64,
    /// `k · e`, the degree entering the trace constant.
    pub n: u32,
    pub c_n: BoundInterval,
    pub term: BoundInterval,
}

/// The full threshold report: the exact `T`, one term per divisor of the
/// field degree, and the final enclosure (whose `hi` is the certified
/// threshold).
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub k: u64,
    pub ell: u64,
    pub t: BigRational,
    pub terms: Vec<DivisorTerm>,
    pub c: BoundInterval,
}

/// The threshold `C(L, k) = max over e | ℓ of (k·e·T / (ℓ·c_(ke)))^((k²e-k)/2)`
/// where `ℓ` is the degree of the totally real field `L` and `T` comes from
/// [`big_t`]. Division uses the lower enclosure of `c_(ke)`, so the
/// reported `hi` is a sound upper bound.
pub fn capital_c(
    field: &Arc<NumberField>,
    k: u64,
    a_list: &[AlgebraicNumber],
    precision: u32,
) -> Result<BoundReport, BoundsError> {
    if k < 2 {
        return Err(BoundsError::BadDegree(k));
    }
    if !field.is_totally_real() {
        return Err(BoundsError::FieldNotTotallyReal);
    }
    for a in a_list {
        if a.field() != field {
            return Err(BoundsError::FieldMismatch);
        }
    }
    let t = big_t(a_list)?;
    debug_assert!(t.is_positive(), "trace of totally positive products is positive");
    let ell = field.degree() as u64;
    let mut terms = Vec::new();
    let mut total: Option<BoundInterval> = None;
    for e in (1..=ell).filter(|e| ell % e == 0) {
        let n: u32 = (k * e)
            .try_into()
            .map_err(|_| BoundsError::BadDegree(k * e))?;
        let c_n = schur_constant(n, precision)?;
        let scalar = BigRational::new(BigInt::from(k * e), BigInt::from(ell)) * &t;
        let base = BoundInterval::point(scalar).div(&c_n);
        let exponent = k * k * e - k;
        let term = if exponent % 2 == 0 {
            base.pow_int(exponent / 2)
        } else {
            base.pow_ratio(exponent, 2, precision)
        };
        total = Some(match total {
            None => term.clone(),
            Some(acc) => acc.max_with(&term),
        });
        terms.push(DivisorTerm { e, n, c_n, term });
    }
    Ok(BoundReport {
        k,
        ell,
        t,
        terms,
        c: total.expect("e = 1 always contributes"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurVerdict {
    Holds,
    /// Contradicts a theorem; occurrence signals an implementation bug and
    /// must be surfaced loudly by callers.
    Violated,
    /// The exact left side fell inside the enclosure of the right side;
    /// retry at higher precision.
    Undecided,
}

/// Verifies `Tr(β²) ≥ c_n · Δ(β)^(2/(n²-n))` for an element of a totally
/// real field of degree `n ≥ 2`. The left side is exact; the right side is
/// an enclosure, so the verdict is `Holds` only when the comparison clears
/// the upper endpoint.
pub fn schur_check(b: &AlgebraicNumber, precision: u32) -> Result<SchurVerdict, BoundsError> {
    let n = b.field().degree() as u64;
    if n < 2 {
        return Err(BoundsError::BadDegree(n));
    }
    if !b.field().is_totally_real() {
        return Err(BoundsError::FieldNotTotallyReal);
    }
    let lhs = b.mul(b).trace();
    let delta = b.delta();
    debug_assert!(!delta.is_negative(), "discriminants are squares of reals");
    let m: u32 = ((n * n - n) / 2)
        .try_into()
        .map_err(|_| BoundsError::BadDegree(n))?;
    let rhs = schur_constant(n as u32, precision)?
        .mul(&nth_root_enclosure(&delta, m, precision));
    if lhs >= *rhs.hi() {
        Ok(SchurVerdict::Holds)
    } else if lhs < *rhs.lo() {
        Ok(SchurVerdict::Violated)
    } else {
        Ok(SchurVerdict::Undecided)
    }
}

/// Result of the elementwise Cauchy–Schwarz hypothesis check on Gram data:
/// whether `4·a1·a2 ⪰ b²`, together with the exact traces of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyCheck {
    pub holds: bool,
    pub lhs_trace: BigRational,
    pub rhs_trace: BigRational,
}

/// Checks `4·a1·a2 ⪰ b²` (the hypothesis side: `a1 = Q(u)`, `a2 = Q(v)`,
/// `b = 2B(u, v)` for candidate Gram data) and reports the trace comparison.
pub fn cauchy_trace_check(
    a1: &AlgebraicNumber,
    a2: &AlgebraicNumber,
    b: &AlgebraicNumber,
) -> Result<CauchyCheck, BoundsError> {
    if a1.field() != a2.field() || a1.field() != b.field() {
        return Err(BoundsError::FieldMismatch);
    }
    let four = BigRational::from_integer(BigInt::from(4));
    let lhs = a1.mul(a2).scale(&four);
    let rhs = b.mul(b);
    let holds = check_succeq(&lhs, &rhs)?;
    Ok(CauchyCheck {
        holds,
        lhs_trace: lhs.trace(),
        rhs_trace: rhs.trace(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RationalPoly;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn root2_field() -> Arc<NumberField> {
        NumberField::new("Q(sqrt2)", RationalPoly::from_integers(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn schur_constant_examples() {
        // c_2 = 2/4 = 1/2 exactly.
        let c2 = schur_constant(2, 128).unwrap();
        assert!(c2.is_point());
        assert_eq!(*c2.lo(), qr(1, 2));

        // c_3 = 6/108^(1/3), i.e. the cube root of 2.
        let c3 = schur_constant(3, 128).unwrap();
        let cube = |x: &BigRational| x * x * x;
        assert!(cube(c3.lo()) < q(2));
        assert!(cube(c3.hi()) > q(2));
        assert!(c3.width() < qr(1, 1_000_000));

        let c4 = schur_constant(4, 64).unwrap();
        assert!(c4.is_positive());

        assert!(matches!(schur_constant(1, 64), Err(BoundsError::BadDegree(1))));
    }

    #[test]
    fn big_t_examples() {
        let f = root2_field();
        let one = f.one();
        let a = f.element(alloc::vec![q(2), q(1)]); // 2 + √2
        assert_eq!(big_t(&[one.clone(), a.clone()]).unwrap(), q(16));
        assert_eq!(big_t(&[one.clone(), one.clone()]).unwrap(), q(8));
        assert!(matches!(big_t(&[one]), Err(BoundsError::NeedTwoElements)));
        // √2 is not totally positive.
        assert!(matches!(
            big_t(&[f.one(), f.gen()]),
            Err(BoundsError::NotTotallyPositive(1))
        ));
    }

    #[test]
    fn capital_c_shape() {
        let f = root2_field();
        let a = f.element(alloc::vec![q(2), q(1)]);
        let report = capital_c(&f, 3, &[f.one(), a], 128).unwrap();
        assert_eq!(report.t, q(16));
        assert_eq!(report.terms.len(), 2); // divisors 1 and 2 of ℓ = 2
        assert!(report.c.is_positive());
        // The e = 1 term is (24/c_3)³ = 6912 exactly as a real number; the
        // enclosure must contain it.
        assert!(report.terms[0].term.contains(&q(6912)));
        // The e = 2 term dominates.
        assert!(report.terms[1].term.lo() > report.terms[0].term.hi());

        // Degenerate degree-1 field: single divisor.
        let linear = NumberField::new("Q", RationalPoly::from_integers(&[-1, 1])).unwrap();
        let ones = [linear.one(), linear.from_int(2)];
        let report1 = capital_c(&linear, 2, &ones, 64).unwrap();
        assert_eq!(report1.terms.len(), 1);

        assert!(matches!(
            capital_c(&f, 1, &[f.one(), f.one()], 64),
            Err(BoundsError::BadDegree(1))
        ));
    }

    #[test]
    fn schur_check_examples() {
        let f = root2_field();
        // β = √2: Tr(β²) = 4 and c_2·Δ(β) = 8/2 = 4; equality holds at
        // exact-rational collapse.
        assert_eq!(schur_check(&f.gen(), 128).unwrap(), SchurVerdict::Holds);
        // Rational β: Δ = 0, right side 0.
        assert_eq!(schur_check(&f.from_int(5), 64).unwrap(), SchurVerdict::Holds);
        // Golden ratio: Tr(β²) = 3 ≥ 5/2.
        let golden =
            NumberField::new("Q(golden)", RationalPoly::from_integers(&[-1, -1, 1])).unwrap();
        assert_eq!(schur_check(&golden.gen(), 128).unwrap(), SchurVerdict::Holds);

        let linear = NumberField::new("Q", RationalPoly::from_integers(&[-1, 1])).unwrap();
        assert!(matches!(
            schur_check(&linear.one(), 64),
            Err(BoundsError::BadDegree(1))
        ));
    }

    #[test]
    fn cauchy_examples() {
        let f = root2_field();
        let unit = cauchy_trace_check(&f.one(), &f.one(), &f.from_int(2)).unwrap();
        assert!(unit.holds);
        assert_eq!(unit.lhs_trace, q(8));
        assert_eq!(unit.rhs_trace, q(8));

        let a = f.element(alloc::vec![q(2), q(1)]);
        let orth = cauchy_trace_check(&f.one(), &a, &f.zero()).unwrap();
        assert!(orth.holds);

        let bad = cauchy_trace_check(&f.one(), &f.one(), &f.from_int(3)).unwrap();
        assert!(!bad.holds);
        assert!(bad.lhs_trace < bad.rhs_trace);
    }
}
