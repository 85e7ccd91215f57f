//! The group side of the field–group dictionary for composita: Galois data
//! `(T, S)` stand for a field via its closure group `T` and the stabilizer
//! `S` of the field inside the closure. Intermediate groups of `S×U ≤ T×V`
//! classify the intermediate fields of the compositum, and the main-theorem
//! hypothesis checker evaluates the group-expressible conditions.
//!
//! Galois data is supplied as abstract group pairs; computing Galois
//! closures of arbitrary fields is out of scope here.

use alloc::vec::Vec;
use core::fmt;

use crate::diagonal::{DiagonalError, DiagonalInstance};
use crate::goursat::GoursatError;
use crate::group::{Caps, GroupError, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaloisError {
    Group(GroupError),
    Diagonal(DiagonalError),
    /// The stabilizer has nontrivial core in the closure group, so the
    /// closure would not be faithful.
    UnfaithfulStabilizer,
}

impl fmt::Display for GaloisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisError::Group(e) => write!(f, "{e}"),
            GaloisError::Diagonal(e) => write!(f, "{e}"),
            GaloisError::UnfaithfulStabilizer => {
                write!(f, "stabilizer has nontrivial core in the closure group")
            }
        }
    }
}

impl core::error::Error for GaloisError {}

impl From<GroupError> for GaloisError {
    fn from(e: GroupError) -> Self {
        GaloisError::Group(e)
    }
}

impl From<DiagonalError> for GaloisError {
    fn from(e: DiagonalError) -> Self {
        match e {
            DiagonalError::Group(g) => GaloisError::Group(g),
            other => GaloisError::Diagonal(other),
        }
    }
}

impl From<GoursatError> for GaloisError {
    fn from(e: GoursatError) -> Self {
        GaloisError::from(DiagonalError::from(e))
    }
}

/// A field described through its Galois closure: the closure group `T`
/// and the stabilizer `S` of the field, with `[T:S]` the field degree.
/// The core of `S` in `T` must be trivial (a nontrivial core would mean
/// the "closure" is larger than the actual Galois closure).
#[derive(Clone, Debug)]
pub struct GaloisDatum {
    closure_group: PermGroup,
    stabilizer: PermGroup,
    degree: usize,
}

impl GaloisDatum {
    pub fn new(closure_group: PermGroup, stabilizer: PermGroup) -> Result<Self, GaloisError> {
        if !stabilizer.is_subgroup_of(&closure_group) {
            return Err(GroupError::NotASubgroup.into());
        }
        if !stabilizer.core_in(&closure_group)?.is_trivial() {
            return Err(GaloisError::UnfaithfulStabilizer);
        }
        let degree = closure_group.order() / stabilizer.order();
        Ok(GaloisDatum {
            closure_group,
            stabilizer,
            degree,
        })
    }

    pub fn closure_group(&self) -> &PermGroup {
        &self.closure_group
    }

    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    /// The field degree `[T:S]`.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntermediateLabel {
    /// `G ≥ T×U`: the intermediate field is contained in `L`... seen from
    /// the group side, the fixed field contains `K`.
    ContainsK,
    /// `G ≤ S×V`: the fixed field is a subfield of `L`.
    SubfieldOfL,
    /// Neither: a diagonal intermediate group.
    Diagonal,
}

/// Classification of all intermediate groups `S×U ≤ G ≤ T×V`. Labels use
/// the fixed precedence ContainsK > SubfieldOfL > Diagonal (the first two
/// cannot actually overlap for proper pairs, but the order is pinned for
/// deterministic reports).
#[derive(Clone, Debug)]
pub struct IntermediateClassification {
    pub labeled: Vec<(PermGroup, IntermediateLabel)>,
    pub contains_k: usize,
    pub subfield_of_l: usize,
    pub diagonal: usize,
}

/// Labels every intermediate group of `S×U ≤ T×V` where `(S, T)` comes from
/// the datum for `K` and `(U, V)` from the datum for `L`. Both containments
/// must be proper.
pub fn classify_intermediates(
    k_datum: &GaloisDatum,
    l_datum: &GaloisDatum,
    caps: &Caps,
) -> Result<IntermediateClassification, GaloisError> {
    let inst = DiagonalInstance::new(
        k_datum.stabilizer.clone(),
        k_datum.closure_group.clone(),
        l_datum.stabilizer.clone(),
        l_datum.closure_group.clone(),
        caps,
    )?;
    let subgroups = inst.product().enumerate_subgroups(caps)?;
    let mut labeled = Vec::new();
    let mut contains_k = 0;
    let mut subfield_of_l = 0;
    let mut diagonal = 0;
    for g in subgroups {
        if !inst.s_x_u().is_subgroup_of(&g) {
            continue;
        }
        let label = if inst.t_x_u().is_subgroup_of(&g) {
            contains_k += 1;
            IntermediateLabel::ContainsK
        } else if g.is_subgroup_of(inst.s_x_v()) {
            subfield_of_l += 1;
            IntermediateLabel::SubfieldOfL
        } else {
            diagonal += 1;
            IntermediateLabel::Diagonal
        };
        labeled.push((g, label));
    }
    Ok(IntermediateClassification {
        labeled,
        contains_k,
        subfield_of_l,
        diagonal,
    })
}

/// True iff every intermediate field of the compositum is a subfield of `L`
/// or contains `K`: no intermediate group is diagonal.
pub fn verify_bridge(
    k_datum: &GaloisDatum,
    l_datum: &GaloisDatum,
    caps: &Caps,
) -> Result<bool, GaloisError> {
    Ok(classify_intermediates(k_datum, l_datum, caps)?.diagonal == 0)
}

/// Three-valued status for externally supplied conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Pass,
    Fail,
    Unknown,
}

/// Evaluation of the main-theorem hypotheses for `K` of degree `k` against
/// a target degree `ℓ`:
///
/// * (i) the discriminant bound and (ii) coprimality are echoed from the
///   supplied flags (they live on the number-field side);
/// * (iii) "no non-trivial subfields" is `S` maximal in `T`;
/// * (iv) "not Galois or k ∤ ℓ" is evaluated in its operative form via
///   normality of `S`, and also under the strict reading "Galois means `S`
///   trivial" — on faithful data the two coincide (a normal stabilizer with
///   trivial core is trivial), and both are reported to rule out silent
///   divergence on malformed input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub k: usize,
    pub ell: u64,
    pub disc_bound: TriState,
    pub coprimality: TriState,
    pub no_nontrivial_subfields: bool,
    pub not_galois_or_degree_nondivisible: bool,
    pub strict_galois_reading: bool,
    pub readings_agree: bool,
    pub overall: TriState,
}

pub fn check_theorem_hypotheses(
    k_datum: &GaloisDatum,
    ell: u64,
    disc_bound: TriState,
    coprimality: TriState,
) -> Result<HypothesisReport, GaloisError> {
    let s = &k_datum.stabilizer;
    let t = &k_datum.closure_group;
    let k = k_datum.degree;
    let no_nontrivial_subfields = s.is_maximal_in(t)?;
    let k_divides_ell = k as u64 != 0 && ell % (k as u64) == 0;
    let s_normal = s.is_normal_in(t)?;
    let not_galois_or_degree_nondivisible = !s_normal || !k_divides_ell;
    let strict_galois_reading = !s.is_trivial() || !k_divides_ell;
    let readings_agree = not_galois_or_degree_nondivisible == strict_galois_reading;
    let group_side = no_nontrivial_subfields && not_galois_or_degree_nondivisible;
    let overall = if !group_side
        || disc_bound == TriState::Fail
        || coprimality == TriState::Fail
    {
        TriState::Fail
    } else if disc_bound == TriState::Unknown || coprimality == TriState::Unknown {
        TriState::Unknown
    } else {
        TriState::Pass
    };
    Ok(HypothesisReport {
        k,
        ell,
        disc_bound,
        coprimality,
        no_nontrivial_subfields,
        not_galois_or_degree_nondivisible,
        strict_galois_reading,
        readings_agree,
        overall,
    })
}
