//! Exact machinery for subgroup structure in direct products of finite
//! groups and for certified trace/discriminant bounds over totally real
//! number fields.
//!
//! The crate has two halves:
//!
//! * a finite permutation-group kernel ([`perm`], [`group`], [`quotient`],
//!   [`iso`]) powering the quintuple correspondence for product subgroups
//!   ([`goursat`]), the diagonal-subgroup decision procedure ([`diagonal`])
//!   and the Galois-side intermediate-group classifier ([`galois`]);
//! * an exact number-field layer ([`poly`], [`numberfield`]) with a
//!   directed-rounding interval type ([`interval`]) feeding the other
//!   quantitative computations in [`bounds`].
//!
//! Everything is computed over exact integers and rationals; verdicts are
//! never produced by floating point. All values are immutable after
//! construction and safe to share across threads.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod diagonal;
pub mod galois;
pub mod goursat;
pub mod group;
pub mod interval;
pub mod iso;
pub mod numberfield;
pub mod perm;
pub mod poly;
pub mod quotient;

pub use bounds::{
    big_t, capital_c, cauchy_trace_check, schur_check, schur_constant, BoundReport, BoundsError,
    CauchyCheck, DivisorTerm, SchurVerdict,
};
pub use diagonal::{
    construct_from_nr, criterion_index, criterion_max_nonnormal, decide, decide_brute,
    is_diagonal, witness_nilpotent_case, witness_normal_case, witness_pgroup_case, witness_report,
    DecisionMethod, DecisionReport, DiagonalError, DiagonalInstance, Verdict,
};
pub use galois::{
    check_theorem_hypotheses, classify_intermediates, verify_bridge, GaloisDatum, GaloisError,
    HypothesisReport, IntermediateClassification, IntermediateLabel, TriState,
};
pub use goursat::{enumerate_product_subgroups, GoursatError, ProductGroup, Quintuple};
pub use group::{Caps, GroupError, PermGroup};
pub use interval::{nth_root_enclosure, BoundInterval};
pub use iso::{find_coset_isomorphisms, find_isomorphisms, Isomorphism};
pub use numberfield::{
    check_succeq, delta_tuple, discs_coprime, order_discriminant, verify_dim_equality,
    AlgebraicNumber, CoprimalityVerdict, DimReport, FieldError, Irreducibility, NumberField,
};
pub use perm::Permutation;
pub use poly::{
    count_distinct_real_roots, count_distinct_real_roots_in, irreducibility, sturm_chain,
    IrreducibilityResult, PolyError, RationalPoly, RootBound,
};
pub use quotient::QuotientGroup;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
