//! Exact arithmetic in `Q[x]/(f)` for a monic irreducible integer
//! polynomial `f`: traces, discriminants of tuples and elements,
//! total-reality and total-positivity tests via Sturm chains, a
//! conservative order-discriminant coprimality check, and the
//! Gram–Schmidt dimension-equality verifier.
//!
//! Nothing here touches floating point; positivity verdicts are exact and
//! double as proofs. The maximal order is never computed — all discriminant
//! work uses the order `Z[α]`, which is why coprimality is three-valued
//! (with an exact refinement for quadratic fields).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factor_bigint, valuation};
use crate::poly::{
    count_distinct_real_roots, count_distinct_real_roots_in, irreducibility,
    IrreducibilityResult, RationalPoly, RootBound,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    ConstantPolynomial,
    NotMonic,
    NotIntegerCoefficients,
    ReduciblePolynomial(RationalPoly),
    /// The built-in tests could not settle irreducibility; construction can
    /// proceed only with an explicit user assertion.
    IrreducibilityUnknown,
    FieldMismatch,
    WrongArity { expected: usize, found: usize },
    FieldNotTotallyReal,
    NotInvertible,
    ShapeMismatch,
    FormNotSymmetric,
    NotPositiveDefinite,
    GramMismatch { row: usize, col: usize },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::ConstantPolynomial => write!(f, "defining polynomial must be nonconstant"),
            FieldError::NotMonic => write!(f, "defining polynomial must be monic"),
            FieldError::NotIntegerCoefficients => {
                write!(f, "defining polynomial must have integer coefficients")
            }
            FieldError::ReduciblePolynomial(w) => {
                write!(f, "defining polynomial is reducible (factor: {w})")
            }
            FieldError::IrreducibilityUnknown => write!(
                f,
                "irreducibility could not be proven; pass an explicit assertion to proceed"
            ),
            FieldError::FieldMismatch => write!(f, "elements belong to different fields"),
            FieldError::WrongArity { expected, found } => {
                write!(f, "expected {expected} elements, found {found}")
            }
            FieldError::FieldNotTotallyReal => write!(f, "field is not totally real"),
            FieldError::NotInvertible => write!(f, "element is not invertible"),
            FieldError::ShapeMismatch => write!(f, "matrix or vector dimensions do not line up"),
            FieldError::FormNotSymmetric => write!(f, "bilinear form matrix is not symmetric"),
            FieldError::NotPositiveDefinite => {
                write!(f, "bilinear form is not positive definite on the span")
            }
            FieldError::GramMismatch { row, col } => write!(
                f,
                "Gram entry ({row}, {col}) is not the rational value claimed"
            ),
        }
    }
}

impl core::error::Error for FieldError {}

/// How irreducibility of the defining polynomial was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Proven,
    UserAsserted,
}

/// The field `Q[x]/(min_poly)` for a monic irreducible integer polynomial.
#[derive(Debug)]
pub struct NumberField {
    label: String,
    min_poly: RationalPoly,
    degree: usize,
    irreducibility: Irreducibility,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(label: &str, min_poly: RationalPoly) -> Result<Arc<Self>, FieldError> {
        Self::build(label, min_poly, false)
    }

    /// Like [`new`](Self::new) but accepts a polynomial whose
    /// irreducibility the built-in tests cannot settle, recording the
    /// override. A proven-reducible polynomial is still rejected.
    pub fn new_asserted_irreducible(
        label: &str,
        min_poly: RationalPoly,
    ) -> Result<Arc<Self>, FieldError> {
        Self::build(label, min_poly, true)
    }

    fn build(label: &str, min_poly: RationalPoly, assert_irr: bool) -> Result<Arc<Self>, FieldError> {
        let degree = match min_poly.degree() {
            None | Some(0) => return Err(FieldError::ConstantPolynomial),
            Some(d) => d,
        };
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic);
        }
        if !min_poly.has_integer_coeffs() {
            return Err(FieldError::NotIntegerCoefficients);
        }
        let irreducibility = match irreducibility(&min_poly)
            .expect("nonconstant polynomial")
        {
            IrreducibilityResult::Proven => Irreducibility::Proven,
            IrreducibilityResult::Reducible(w) => {
                return Err(FieldError::ReduciblePolynomial(w))
            }
            IrreducibilityResult::Unknown => {
                if assert_irr {
                    Irreducibility::UserAsserted
                } else {
                    return Err(FieldError::IrreducibilityUnknown);
                }
            }
        };
        Ok(Arc::new(NumberField {
            label: String::from(label),
            min_poly,
            degree,
            irreducibility,
        }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn min_poly(&self) -> &RationalPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    /// All embeddings land in the reals iff the minimal polynomial has a
    /// full count of real roots.
    pub fn is_totally_real(&self) -> bool {
        count_distinct_real_roots(&self.min_poly) == self.degree
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<BigRational>) -> AlgebraicNumber {
        self.element_from_poly(RationalPoly::new(coeffs))
    }

    pub fn element_from_poly(self: &Arc<Self>, poly: RationalPoly) -> AlgebraicNumber {
        let residue = reduce_mod(&poly, &self.min_poly);
        AlgebraicNumber {
            field: Arc::clone(self),
            residue,
        }
    }

    /// The class of `x`, i.e. the generator α.
    pub fn gen(self: &Arc<Self>) -> AlgebraicNumber {
        self.element_from_poly(RationalPoly::x())
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraicNumber {
        self.element_from_poly(RationalPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> AlgebraicNumber {
        self.element_from_poly(RationalPoly::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> AlgebraicNumber {
        self.element_from_poly(RationalPoly::constant(q))
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> AlgebraicNumber {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }
}

fn reduce_mod(poly: &RationalPoly, min_poly: &RationalPoly) -> RationalPoly {
    let (_, r) = poly.div_rem(min_poly).expect("minimal polynomial is nonzero");
    r
}

/// An element of a number field, stored as the polynomial residue of
/// degree below the field degree. Arithmetic is polynomial arithmetic
/// modulo the minimal polynomial, all exact.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Arc<NumberField>,
    residue: RationalPoly,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.residue == other.residue
    }
}

impl Eq for AlgebraicNumber {}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {}", self.residue, self.field.label)
    }
}

impl AlgebraicNumber {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn residue(&self) -> &RationalPoly {
        &self.residue
    }

    pub fn same_field(&self, other: &Self) -> bool {
        self.field == other.field
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.same_field(other),
            "algebraic numbers from different fields"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// `Some(q)` iff the element lies in the rationals.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.residue.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            residue: self.residue.add(&other.residue),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            residue: self.residue.sub(&other.residue),
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            residue: self.residue.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            residue: reduce_mod(&self.residue.mul(&other.residue), &self.field.min_poly),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            residue: self.residue.scale(q),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// residue and the minimal polynomial.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::NotInvertible);
        }
        // Maintain r = s·residue (mod min_poly); stop when r is constant.
        let mut r0 = self.field.min_poly.clone();
        let mut r1 = self.residue.clone();
        let mut s0 = RationalPoly::zero();
        let mut s1 = RationalPoly::one();
        while let Some(d) = r1.degree() {
            if d == 0 {
                let inv = BigRational::one() / r1.coeff(0);
                let residue = reduce_mod(&s1.scale(&inv), &self.field.min_poly);
                return Ok(AlgebraicNumber {
                    field: Arc::clone(&self.field),
                    residue,
                });
            }
            let (q, r) = r0.div_rem(&r1).expect("r1 nonzero");
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // gcd(residue, min_poly) is nonconstant: only possible when the
        // defining polynomial was user-asserted irreducible but is not.
        Err(FieldError::NotInvertible)
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.assert_same_field(other);
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The matrix of multiplication by this element in the power basis
    /// `1, α, …, α^(d-1)`: column `j` holds the residue of `a·α^j`.
    pub fn mult_matrix(&self) -> Vec<Vec<BigRational>> {
        let d = self.field.degree;
        let mut matrix = vec![vec![BigRational::zero(); d]; d];
        let mut column = self.residue.clone();
        for j in 0..d {
            for i in 0..d {
                matrix[i][j] = column.coeff(i);
            }
            // Multiply by α: shift up one degree and reduce.
            let mut shifted = vec![BigRational::zero()];
            shifted.extend(column.coeffs().iter().cloned());
            column = reduce_mod(&RationalPoly::new(shifted), &self.field.min_poly);
        }
        matrix
    }

    /// `Tr(a)`: the trace of the multiplication matrix, equal to the sum of
    /// the images of `a` under all embeddings.
    pub fn trace(&self) -> BigRational {
        let d = self.field.degree;
        let mut total = BigRational::zero();
        let mut column = self.residue.clone();
        for j in 0..d {
            total += column.coeff(j);
            let mut shifted = vec![BigRational::zero()];
            shifted.extend(column.coeffs().iter().cloned());
            column = reduce_mod(&RationalPoly::new(shifted), &self.field.min_poly);
        }
        total
    }

    /// Characteristic polynomial of the multiplication matrix, computed by
    /// fraction-free (Bareiss) elimination over the polynomial ring.
    pub fn char_poly(&self) -> RationalPoly {
        let d = self.field.degree;
        let m = self.mult_matrix();
        // Entries of xI - M.
        let mut a: Vec<Vec<RationalPoly>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let constant = -m[i][j].clone();
                        if i == j {
                            RationalPoly::new(vec![constant, BigRational::one()])
                        } else {
                            RationalPoly::constant(constant)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut sign = 1i64;
        let mut prev = RationalPoly::one();
        for k in 0..d {
            if a[k][k].is_zero() {
                let swap = (k + 1..d).find(|&r| !a[r][k].is_zero());
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return RationalPoly::zero(),
                }
            }
            if k + 1 == d {
                break;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    let (q, r) = num.div_rem(&prev).expect("prev pivot is nonzero");
                    debug_assert!(r.is_zero(), "Bareiss division is exact");
                    a[i][j] = q;
                }
                a[i][k] = RationalPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[d - 1][d - 1].clone();
        if sign < 0 {
            det.neg()
        } else {
            det
        }
    }

    /// `Δ(a) := Δ(1, a, …, a^(d-1))`; zero iff `a` does not generate the
    /// field.
    pub fn delta(&self) -> BigRational {
        let d = self.field.degree;
        let powers: Vec<AlgebraicNumber> = (0..d).map(|i| self.pow(i as u32)).collect();
        delta_tuple(&self.field, &powers).expect("power basis has the right arity")
    }

    /// Strict total positivity: every embedding is positive, decided by a
    /// Sturm count of the characteristic polynomial on `(-∞, 0]` (which
    /// also catches an embedding equal to zero).
    pub fn is_totally_positive(&self) -> Result<bool, FieldError> {
        if !self.field.is_totally_real() {
            return Err(FieldError::FieldNotTotallyReal);
        }
        let char_poly = self.char_poly();
        let nonpositive = count_distinct_real_roots_in(
            &char_poly,
            &RootBound::NegInf,
            &RootBound::Finite(BigRational::zero()),
        );
        Ok(nonpositive == 0)
    }
}

/// `a ⪰ b`: equality or strict total positivity of the difference.
pub fn check_succeq(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<bool, FieldError> {
    if !a.same_field(b) {
        return Err(FieldError::FieldMismatch);
    }
    if a == b {
        return Ok(true);
    }
    a.sub(b).is_totally_positive()
}

/// Determinant by rational Gaussian elimination.
fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            for j in k..n {
                let sub = &m[k][j] * &factor;
                m[i][j] -= sub;
            }
        }
    }
    det
}

/// Rank by rational Gaussian elimination.
fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot_row = match (row..rows).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        m.swap(row, pivot_row);
        let pivot = m[row][col].clone();
        for r in row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                let sub = &m[row][c] * &factor;
                m[r][c] -= sub;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// `Δ(a_1, …, a_d) = det(Tr(a_i · a_j))`, exact. Requires exactly `d`
/// elements of the same field.
pub fn delta_tuple(
    field: &Arc<NumberField>,
    elements: &[AlgebraicNumber],
) -> Result<BigRational, FieldError> {
    let d = field.degree();
    if elements.len() != d {
        return Err(FieldError::WrongArity {
            expected: d,
            found: elements.len(),
        });
    }
    for e in elements {
        if e.field() != field {
            return Err(FieldError::FieldMismatch);
        }
    }
    let gram: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| elements[i].mul(&elements[j]).trace())
                .collect()
        })
        .collect();
    Ok(det_rational(gram))
}

/// Discriminant of the order `Z[α]`: `Δ` of the power basis. This is the
/// field discriminant times a square integer.
pub fn order_discriminant(field: &Arc<NumberField>) -> BigInt {
    let delta = field.gen().delta();
    debug_assert!(delta.is_integer(), "power-basis discriminant is an integer");
    delta.to_integer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoprimalityVerdict {
    Coprime,
    NotCoprime,
    Inconclusive,
}

/// Exact discriminant of a quadratic field from the squarefree part `m` of
/// the polynomial discriminant: `m` if `m ≡ 1 (mod 4)`, else `4m`. `None`
/// when the squarefree part cannot be established by trial division.
fn quadratic_field_disc(field: &NumberField) -> Option<BigInt> {
    if field.degree() != 2 {
        return None;
    }
    // Monic x² + bx + c.
    let b = field.min_poly().coeff(1).to_integer();
    let c = field.min_poly().coeff(0).to_integer();
    let disc = &b * &b - BigInt::from(4) * &c;
    let (factors, rest) = factor_bigint(&disc, 1_000_000);
    if rest.is_some() {
        return None;
    }
    let mut m = BigInt::one();
    for (p, e) in factors {
        if e % 2 == 1 {
            m *= p;
        }
    }
    if disc.is_negative() {
        m = -m;
    }
    if m.mod_floor(&BigInt::from(4)).is_one() {
        Some(m)
    } else {
        Some(BigInt::from(4) * m)
    }
}

/// Is `p` provably a divisor of the true field discriminant? Sound rules:
/// an odd valuation in the order discriminant survives division by the
/// square of the index, and quadratic fields have an exact classification.
fn proven_field_disc_divisor(field: &NumberField, order_disc: &BigInt, p: &BigInt) -> bool {
    if valuation(order_disc, p) % 2 == 1 {
        return true;
    }
    if let Some(fd) = quadratic_field_disc(field) {
        return (fd % p).is_zero();
    }
    false
}

/// Conservative coprimality of two field discriminants, computed from the
/// order discriminants of `Z[α]`. `Coprime` is sound because the field
/// discriminant divides the order discriminant; `NotCoprime` requires a
/// shared prime proven to divide both field discriminants; everything else
/// is `Inconclusive`.
pub fn discs_coprime(k: &Arc<NumberField>, l: &Arc<NumberField>) -> CoprimalityVerdict {
    let dk = order_discriminant(k);
    let dl = order_discriminant(l);
    if dk.is_zero() || dl.is_zero() {
        return CoprimalityVerdict::Inconclusive;
    }
    let g = dk.gcd(&dl);
    if g.is_one() {
        return CoprimalityVerdict::Coprime;
    }
    let (shared_primes, unfactored) = factor_bigint(&g, 1_000_000);
    for p in shared_primes.keys() {
        if proven_field_disc_divisor(k, &dk, p) && proven_field_disc_divisor(l, &dl, p) {
            return CoprimalityVerdict::NotCoprime;
        }
    }
    let _ = unfactored;
    CoprimalityVerdict::Inconclusive
}

/// Report of the dimension-equality verification: the dimension of the
/// rational span (rank of the rational Gram matrix) against the dimension
/// of the span over the field (count of nonzero Gram–Schmidt vectors), and
/// whether every Gram–Schmidt coefficient turned out rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub dim_over_q: usize,
    pub dim_over_field: usize,
    pub coefficients_rational: bool,
}

impl DimReport {
    pub fn dims_equal(&self) -> bool {
        self.dim_over_q == self.dim_over_field
    }
}

/// Verifies, for vectors over a totally real field whose pairwise values
/// under a positive definite symmetric bilinear form are rational, that the
/// span has the same dimension over the rationals as over the field.
/// Runs Gram–Schmidt over the field, checks every orthogonalized vector has
/// rational coordinates in the input vectors, and independently computes
/// the rational dimension as the rank of the Gram matrix.
pub fn verify_dim_equality(
    field: &Arc<NumberField>,
    vectors: &[Vec<AlgebraicNumber>],
    form: &[Vec<AlgebraicNumber>],
    gram: &[Vec<BigRational>],
) -> Result<DimReport, FieldError> {
    if !field.is_totally_real() {
        return Err(FieldError::FieldNotTotallyReal);
    }
    let n = vectors.len();
    let m = form.len();
    if gram.len() != n
        || gram.iter().any(|row| row.len() != n)
        || form.iter().any(|row| row.len() != m)
        || vectors.iter().any(|v| v.len() != m)
    {
        return Err(FieldError::ShapeMismatch);
    }
    for row in form {
        for entry in row {
            if entry.field() != field {
                return Err(FieldError::FieldMismatch);
            }
        }
    }
    for v in vectors {
        for entry in v {
            if entry.field() != field {
                return Err(FieldError::FieldMismatch);
            }
        }
    }
    for i in 0..m {
        for j in 0..i {
            if form[i][j] != form[j][i] {
                return Err(FieldError::FormNotSymmetric);
            }
        }
    }

    let bilinear = |u: &[AlgebraicNumber], v: &[AlgebraicNumber]| -> AlgebraicNumber {
        let mut acc = field.zero();
        for i in 0..m {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if v[j].is_zero() {
                    continue;
                }
                acc = acc.add(&u[i].mul(&form[i][j]).mul(&v[j]));
            }
        }
        acc
    };

    // Precondition: the supplied Gram matrix is exactly the (rational)
    // B-values of the vectors.
    for i in 0..n {
        for j in 0..n {
            let value = bilinear(&vectors[i], &vectors[j]);
            match value.as_rational() {
                Some(q) if q == gram[i][j] => {}
                _ => return Err(FieldError::GramMismatch { row: i, col: j }),
            }
        }
    }

    // Gram–Schmidt over the field, tracking each orthogonalized vector's
    // coordinates in the v-basis.
    let mut ortho: Vec<Vec<AlgebraicNumber>> = Vec::new();
    let mut ortho_coords: Vec<Vec<AlgebraicNumber>> = Vec::new();
    let mut norms: Vec<AlgebraicNumber> = Vec::new();
    let mut coefficients_rational = true;
    for (idx, v) in vectors.iter().enumerate() {
        let mut u = v.clone();
        let mut coords: Vec<AlgebraicNumber> = (0..n)
            .map(|j| if j == idx { field.one() } else { field.zero() })
            .collect();
        for k in 0..ortho.len() {
            if norms[k].is_zero() {
                continue;
            }
            let coeff = bilinear(v, &ortho[k]).div(&norms[k])?;
            if coeff.as_rational().is_none() {
                coefficients_rational = false;
            }
            for i in 0..m {
                u[i] = u[i].sub(&coeff.mul(&ortho[k][i]));
            }
            for i in 0..n {
                coords[i] = coords[i].sub(&coeff.mul(&ortho_coords[k][i]));
            }
        }
        let norm = bilinear(&u, &u);
        let is_zero_vector = u.iter().all(|c| c.is_zero());
        if is_zero_vector {
            norms.push(field.zero());
        } else {
            if !norm.is_totally_positive()? {
                return Err(FieldError::NotPositiveDefinite);
            }
            if coords.iter().any(|c| c.as_rational().is_none()) {
                coefficients_rational = false;
            }
            norms.push(norm);
        }
        ortho.push(u);
        ortho_coords.push(coords);
    }

    let dim_over_field = norms.iter().filter(|nz| !nz.is_zero()).count();
    let dim_over_q = rank_rational(gram.to_vec());
    Ok(DimReport {
        dim_over_q,
        dim_over_field,
        coefficients_rational,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn root2_field() -> Arc<NumberField> {
        NumberField::new("Q(sqrt2)", RationalPoly::from_integers(&[-2, 0, 1])).unwrap()
    }

    fn golden_field() -> Arc<NumberField> {
        NumberField::new("Q(golden)", RationalPoly::from_integers(&[-1, -1, 1])).unwrap()
    }

    #[test]
    fn field_construction() {
        assert!(root2_field().is_totally_real());
        let gauss = NumberField::new("Q(i)", RationalPoly::from_integers(&[1, 0, 1])).unwrap();
        assert!(!gauss.is_totally_real());
        let linear = NumberField::new("Q", RationalPoly::from_integers(&[-7, 1])).unwrap();
        assert!(linear.is_totally_real());
        assert_eq!(linear.degree(), 1);

        assert!(matches!(
            NumberField::new("bad", RationalPoly::from_integers(&[-1, 0, 1])),
            Err(FieldError::ReduciblePolynomial(_))
        ));
        assert!(matches!(
            NumberField::new("bad", RationalPoly::from_integers(&[7])),
            Err(FieldError::ConstantPolynomial)
        ));
        assert!(matches!(
            NumberField::new("bad", RationalPoly::from_integers(&[1, 0, 2])),
            Err(FieldError::NotMonic)
        ));
    }

    #[test]
    fn traces() {
        let f = root2_field();
        assert_eq!(f.one().trace(), q(2));
        assert_eq!(f.gen().trace(), q(0));
        // 3 + √2.
        let a = f.element(vec![q(3), q(1)]);
        assert_eq!(a.trace(), q(6));
    }

    #[test]
    fn delta_tuples() {
        let f = root2_field();
        let basis = [f.one(), f.gen()];
        assert_eq!(delta_tuple(&f, &basis).unwrap(), q(8));

        let g = golden_field();
        let basis_g = [g.one(), g.gen()];
        assert_eq!(delta_tuple(&g, &basis_g).unwrap(), q(5));

        // Repeated element: singular Gram matrix.
        let rep = [f.gen(), f.gen()];
        assert_eq!(delta_tuple(&f, &rep).unwrap(), q(0));

        assert!(matches!(
            delta_tuple(&f, &[f.one()]),
            Err(FieldError::WrongArity { .. })
        ));
    }

    #[test]
    fn delta_elements() {
        let f = root2_field();
        assert_eq!(f.gen().delta(), q(8));
        let sqrt5 = NumberField::new("Q(sqrt5)", RationalPoly::from_integers(&[-5, 0, 1])).unwrap();
        assert_eq!(sqrt5.gen().delta(), q(20));
        // Rational elements never generate a degree-2 field.
        assert_eq!(f.from_int(3).delta(), q(0));
    }

    #[test]
    fn order_discriminants() {
        let f = root2_field();
        assert_eq!(order_discriminant(&f), BigInt::from(8));
        let sqrt5 = NumberField::new("Q(sqrt5)", RationalPoly::from_integers(&[-5, 0, 1])).unwrap();
        assert_eq!(order_discriminant(&sqrt5), BigInt::from(20));
        assert_eq!(order_discriminant(&golden_field()), BigInt::from(5));
    }

    #[test]
    fn coprimality() {
        let r2 = root2_field();
        let golden = golden_field();
        assert_eq!(discs_coprime(&r2, &golden), CoprimalityVerdict::Coprime);
        assert_eq!(discs_coprime(&r2, &r2), CoprimalityVerdict::NotCoprime);
        // Order discs 20 and 5 share the prime 5; the quadratic field
        // formula proves the field discs are 5 and 5.
        let sqrt5 = NumberField::new("Q(sqrt5)", RationalPoly::from_integers(&[-5, 0, 1])).unwrap();
        assert_eq!(discs_coprime(&sqrt5, &golden), CoprimalityVerdict::NotCoprime);
    }

    #[test]
    fn total_positivity() {
        let f = root2_field();
        let two_plus_root = f.element(vec![q(2), q(1)]);
        assert!(two_plus_root.is_totally_positive().unwrap());
        assert!(!f.gen().is_totally_positive().unwrap());
        assert!(!f.zero().is_totally_positive().unwrap());

        let gauss = NumberField::new("Q(i)", RationalPoly::from_integers(&[1, 0, 1])).unwrap();
        assert!(matches!(
            gauss.one().is_totally_positive(),
            Err(FieldError::FieldNotTotallyReal)
        ));
    }

    #[test]
    fn succeq() {
        let f = root2_field();
        let two_plus_root = f.element(vec![q(2), q(1)]);
        assert!(check_succeq(&two_plus_root, &f.zero()).unwrap());
        assert!(check_succeq(&two_plus_root, &two_plus_root).unwrap());
        assert!(!check_succeq(&f.zero(), &two_plus_root).unwrap());
        let golden = golden_field();
        assert!(matches!(
            check_succeq(&f.one(), &golden.one()),
            Err(FieldError::FieldMismatch)
        ));
    }

    #[test]
    fn inverses() {
        let f = root2_field();
        let a = f.element(vec![q(2), q(1)]); // 2 + √2
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), f.one());
        assert!(f.zero().inverse().is_err());
    }

    #[test]
    fn char_polys() {
        let f = root2_field();
        let cp = f.gen().char_poly();
        assert_eq!(cp, RationalPoly::from_integers(&[-2, 0, 1]));
        // Rational element r has char poly (x - r)^d.
        let cp3 = f.from_int(3).char_poly();
        assert_eq!(cp3, RationalPoly::from_integers(&[9, -6, 1]));
    }

    fn identity_form(field: &Arc<NumberField>, m: usize) -> Vec<Vec<AlgebraicNumber>> {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn dim_equality_rational_vectors() {
        let f = root2_field();
        let vectors = vec![
            vec![f.one(), f.zero()],
            vec![f.zero(), f.one()],
        ];
        let gram = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let report = verify_dim_equality(&f, &vectors, &identity_form(&f, 2), &gram).unwrap();
        assert_eq!(report.dim_over_q, 2);
        assert_eq!(report.dim_over_field, 2);
        assert!(report.coefficients_rational);
    }

    #[test]
    fn dim_equality_scaled_vectors() {
        let f = root2_field();
        // v1 = (√2, 0), v2 = (0, √2): Gram = 2·I is rational.
        let vectors = vec![
            vec![f.gen(), f.zero()],
            vec![f.zero(), f.gen()],
        ];
        let gram = vec![vec![q(2), q(0)], vec![q(0), q(2)]];
        let report = verify_dim_equality(&f, &vectors, &identity_form(&f, 2), &gram).unwrap();
        assert!(report.dims_equal());
        assert_eq!(report.dim_over_field, 2);
        assert!(report.coefficients_rational);
    }

    #[test]
    fn dim_equality_gram_mismatch() {
        let f = root2_field();
        // B(v1, v2) = 3√2 is irrational: the precondition filter rejects.
        let vectors = vec![
            vec![f.one(), f.gen()],
            vec![f.gen(), f.from_int(2)],
        ];
        let gram = vec![vec![q(3), q(0)], vec![q(0), q(6)]];
        assert!(matches!(
            verify_dim_equality(&f, &vectors, &identity_form(&f, 2), &gram),
            Err(FieldError::GramMismatch { .. })
        ));
    }

    #[test]
    fn dim_equality_rejects_indefinite_form() {
        let f = root2_field();
        let mut form = identity_form(&f, 2);
        form[0][0] = f.from_int(-1);
        form[1][1] = f.from_int(-1);
        let vectors = vec![vec![f.one(), f.zero()]];
        let gram = vec![vec![q(-1)]];
        assert!(matches!(
            verify_dim_equality(&f, &vectors, &form, &gram),
            Err(FieldError::NotPositiveDefinite)
        ));
    }

    #[test]
    fn dim_equality_with_dependent_vectors() {
        let f = root2_field();
        let vectors = vec![
            vec![f.one(), f.zero()],
            vec![f.from_int(2), f.zero()],
            vec![f.zero(), f.one()],
        ];
        let gram = vec![
            vec![q(1), q(2), q(0)],
            vec![q(2), q(4), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        let report = verify_dim_equality(&f, &vectors, &identity_form(&f, 2), &gram).unwrap();
        assert_eq!(report.dim_over_q, 2);
        assert_eq!(report.dim_over_field, 2);
    }
}
