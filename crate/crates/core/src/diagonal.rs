//! Deciding whether `S×U ≤ T×V` admits a diagonal subgroup: an intermediate
//! `G` with `S×U ≤ G ≤ T×V` that neither contains `T×U` nor lies inside
//! `S×V`.
//!
//! Two cheap criteria run before exhaustive search:
//!
//! * if `S` is maximal and non-normal in `T`, no diagonal subgroup exists;
//! * if `S` is normal in `T` of prime index `p`, a diagonal subgroup exists
//!   iff some `U ≤ N ⊴ R ≤ V` has `[R:N] = p` (so in particular never when
//!   `p ∤ [V:U]`), and each such pair constructs an explicit witness.
//!
//! Everything else falls through to enumeration of the product's subgroups.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::is_prime_u64;
use crate::goursat::{GoursatError, ProductGroup, Quintuple};
use crate::group::{Caps, GroupError, PermGroup};
use crate::quotient::QuotientGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalError {
    Group(GroupError),
    Goursat(GoursatError),
    /// `S ⪇ T` or `U ⪇ V` fails (containment or properness).
    NotProperPair,
    /// A candidate group fails `S×U ≤ G ≤ T×V`.
    NotIntermediate,
    InvalidWitness(&'static str),
    PreconditionFailed(&'static str),
}

impl fmt::Display for DiagonalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagonalError::Group(e) => write!(f, "{e}"),
            DiagonalError::Goursat(e) => write!(f, "{e}"),
            DiagonalError::NotProperPair => {
                write!(f, "instance requires proper containments S < T and U < V")
            }
            DiagonalError::NotIntermediate => {
                write!(f, "group is not intermediate between S×U and T×V")
            }
            DiagonalError::InvalidWitness(why) => write!(f, "invalid witness: {why}"),
            DiagonalError::PreconditionFailed(why) => write!(f, "precondition failed: {why}"),
        }
    }
}

impl core::error::Error for DiagonalError {}

impl From<GroupError> for DiagonalError {
    fn from(e: GroupError) -> Self {
        DiagonalError::Group(e)
    }
}

impl From<GoursatError> for DiagonalError {
    fn from(e: GoursatError) -> Self {
        match e {
            GoursatError::Group(g) => DiagonalError::Group(g),
            other => DiagonalError::Goursat(other),
        }
    }
}

/// An instance `S ⪇ T`, `U ⪇ V` with the product `T×V` and its three
/// distinguished corners materialized once.
#[derive(Clone, Debug)]
pub struct DiagonalInstance {
    s: PermGroup,
    t: PermGroup,
    u: PermGroup,
    v: PermGroup,
    product: ProductGroup,
    s_x_u: PermGroup,
    t_x_u: PermGroup,
    s_x_v: PermGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Diagonal,
    NoDiagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionMethod {
    MaxNonNormal,
    IndexDivisibility,
    BruteForce,
    WitnessConstruction,
}

/// Outcome of a decision. A `Diagonal` verdict always carries a witness
/// that has been re-checked by [`is_diagonal`]; `certificate_checked`
/// records whether the verdict rests on such a computational re-check (for
/// `NoDiagonal` that means an exhaustive scan rather than a criterion).
#[derive(Clone, Debug)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub method: DecisionMethod,
    pub witness: Option<PermGroup>,
    pub witness_pair: Option<(PermGroup, PermGroup)>,
    pub certificate_checked: bool,
    /// Number of intermediate groups examined, when a scan ran.
    pub scanned: Option<usize>,
}

impl DiagonalInstance {
    pub fn new(
        s: PermGroup,
        t: PermGroup,
        u: PermGroup,
        v: PermGroup,
        caps: &Caps,
    ) -> Result<Self, DiagonalError> {
        if !s.is_proper_subgroup_of(&t) || !u.is_proper_subgroup_of(&v) {
            return Err(DiagonalError::NotProperPair);
        }
        let product = ProductGroup::new(t.clone(), v.clone(), caps)?;
        let s_x_u = product.embed_pair_subgroup(&s, &u)?;
        let t_x_u = product.embed_pair_subgroup(&t, &u)?;
        let s_x_v = product.embed_pair_subgroup(&s, &v)?;
        Ok(DiagonalInstance {
            s,
            t,
            u,
            v,
            product,
            s_x_u,
            t_x_u,
            s_x_v,
        })
    }

    pub fn s(&self) -> &PermGroup {
        &self.s
    }

    pub fn t(&self) -> &PermGroup {
        &self.t
    }

    pub fn u(&self) -> &PermGroup {
        &self.u
    }

    pub fn v(&self) -> &PermGroup {
        &self.v
    }

    /// The ambient product `T × V`.
    pub fn product(&self) -> &ProductGroup {
        &self.product
    }

    /// The bottom corner `S × U` of the sandwich.
    pub fn s_x_u(&self) -> &PermGroup {
        &self.s_x_u
    }

    pub fn t_x_u(&self) -> &PermGroup {
        &self.t_x_u
    }

    pub fn s_x_v(&self) -> &PermGroup {
        &self.s_x_v
    }

    /// `[T:S]` when `S` is normal in `T` with prime index; the setting in
    /// which witness pairs `(N, R)` make sense.
    fn prime_index(&self) -> Result<u64, DiagonalError> {
        if !self.s.is_normal_in(&self.t)? {
            return Err(DiagonalError::PreconditionFailed("S is not normal in T"));
        }
        let index = (self.t.order() / self.s.order()) as u64;
        if !is_prime_u64(index) {
            return Err(DiagonalError::PreconditionFailed(
                "[T:S] is not a prime number",
            ));
        }
        Ok(index)
    }
}

/// Whether `g` is diagonal for the instance: intermediate, not above
/// `T×U`, not below `S×V`.
pub fn is_diagonal(g: &PermGroup, inst: &DiagonalInstance) -> Result<bool, DiagonalError> {
    if !inst.s_x_u.is_subgroup_of(g) || !g.is_subgroup_of(inst.product.group()) {
        return Err(DiagonalError::NotIntermediate);
    }
    Ok(!inst.t_x_u.is_subgroup_of(g) && !g.is_subgroup_of(&inst.s_x_v))
}

/// Exhaustive decision: every subgroup of `T×V` above `S×U` is scanned in
/// canonical order and the first diagonal one (if any) is returned as the
/// witness.
pub fn decide_brute(inst: &DiagonalInstance, caps: &Caps) -> Result<DecisionReport, DiagonalError> {
    let subgroups = inst.product.enumerate_subgroups(caps)?;
    let mut scanned = 0;
    for g in subgroups {
        if !inst.s_x_u.is_subgroup_of(&g) {
            continue;
        }
        scanned += 1;
        if is_diagonal(&g, inst)? {
            return Ok(DecisionReport {
                verdict: Verdict::Diagonal,
                method: DecisionMethod::BruteForce,
                witness: Some(g),
                witness_pair: None,
                certificate_checked: true,
                scanned: Some(scanned),
            });
        }
    }
    Ok(DecisionReport {
        verdict: Verdict::NoDiagonal,
        method: DecisionMethod::BruteForce,
        witness: None,
        witness_pair: None,
        certificate_checked: true,
        scanned: Some(scanned),
    })
}

/// Criterion: `S` maximal and non-normal in `T` rules diagonal subgroups
/// out. Returns `None` when inapplicable; never returns a `Diagonal`
/// verdict.
pub fn criterion_max_nonnormal(
    inst: &DiagonalInstance,
) -> Result<Option<DecisionReport>, DiagonalError> {
    if inst.s.is_maximal_in(&inst.t)? && !inst.s.is_normal_in(&inst.t)? {
        return Ok(Some(DecisionReport {
            verdict: Verdict::NoDiagonal,
            method: DecisionMethod::MaxNonNormal,
            witness: None,
            witness_pair: None,
            certificate_checked: false,
            scanned: None,
        }));
    }
    Ok(None)
}

/// Criterion for `S ⊴ T` of prime index `p`: a diagonal subgroup exists iff
/// some `U ≤ N ⊴ R ≤ V` has `[R:N] = p`. Runs the complete `(N, R)` search
/// (the divisibility condition `p | [V:U]` alone is necessary but not
/// sufficient); on success the witness is built by [`construct_from_nr`].
/// Returns `None` when `S` is not normal or the index is composite.
pub fn criterion_index(
    inst: &DiagonalInstance,
    caps: &Caps,
) -> Result<Option<DecisionReport>, DiagonalError> {
    if !inst.s.is_normal_in(&inst.t)? {
        return Ok(None);
    }
    let p = (inst.t.order() / inst.s.order()) as u64;
    if !is_prime_u64(p) {
        return Ok(None);
    }
    let no_diagonal = DecisionReport {
        verdict: Verdict::NoDiagonal,
        method: DecisionMethod::IndexDivisibility,
        witness: None,
        witness_pair: None,
        certificate_checked: false,
        scanned: None,
    };
    let index_v_u = inst.v.order() / inst.u.order();
    if index_v_u % (p as usize) != 0 {
        return Ok(Some(no_diagonal));
    }
    let over_u: Vec<PermGroup> = inst
        .v
        .all_subgroups(caps)?
        .into_iter()
        .filter(|h| inst.u.is_subgroup_of(h))
        .collect();
    for n in &over_u {
        for r in &over_u {
            if !n.is_subgroup_of(r) || r.order() != n.order() * p as usize {
                continue;
            }
            if !n.is_normal_in(r)? {
                continue;
            }
            let witness = construct_from_nr(inst, n, r)?;
            return Ok(Some(DecisionReport {
                verdict: Verdict::Diagonal,
                method: DecisionMethod::IndexDivisibility,
                witness: Some(witness),
                witness_pair: Some((n.clone(), r.clone())),
                certificate_checked: true,
                scanned: None,
            }));
        }
    }
    Ok(Some(no_diagonal))
}

/// Builds the diagonal witness from a pair `(N, R)`: the subgroup defined
/// by the quintuple `(S, T, N, R, φ)` where `φ` matches the two order-p
/// quotients generator to generator. Prime order makes both quotients
/// cyclic, so the order check replaces any isomorphism search, and the
/// first generator pair in canonical order keeps the construction
/// deterministic.
pub fn construct_from_nr(
    inst: &DiagonalInstance,
    n: &PermGroup,
    r: &PermGroup,
) -> Result<PermGroup, DiagonalError> {
    let p = inst.prime_index().map_err(|_| {
        DiagonalError::InvalidWitness("T/S must have prime order for an (N, R) witness")
    })?;
    if !inst.u.is_subgroup_of(n) || !r.is_subgroup_of(&inst.v) || !n.is_subgroup_of(r) {
        return Err(DiagonalError::InvalidWitness("U ≤ N ≤ R ≤ V fails"));
    }
    if !n.is_normal_in(r)? {
        return Err(DiagonalError::InvalidWitness("N is not normal in R"));
    }
    if r.order() != n.order() * p as usize {
        return Err(DiagonalError::InvalidWitness("[R:N] differs from [T:S]"));
    }
    let qa = QuotientGroup::new(&inst.t, &inst.s)?;
    let qb = QuotientGroup::new(r, n)?;
    // Both quotients are cyclic of order p; coset 0 is the identity coset
    // and coset 1 generates.
    let mut phi = Vec::with_capacity(p as usize);
    let mut ca = qa.identity_coset();
    let mut cb = qb.identity_coset();
    for _ in 0..p {
        phi.push((qa.coset_rep(ca).clone(), qb.coset_rep(cb).clone()));
        ca = qa.mul(ca, 1);
        cb = qb.mul(cb, 1);
    }
    let quintuple = Quintuple {
        a1: inst.s.clone(),
        a2: inst.t.clone(),
        b1: n.clone(),
        b2: r.clone(),
        phi,
    };
    let witness = inst.product.subgroup_from_quintuple(&quintuple)?;
    if !is_diagonal(&witness, inst)? {
        return Err(DiagonalError::InvalidWitness(
            "constructed group is not diagonal; this indicates a bug",
        ));
    }
    Ok(witness)
}

/// Case (i): `U` normal in `V` with `p | [V:U]`. Takes `N := U` and `R` the
/// preimage of an order-p cyclic subgroup of `V/U` supplied by Cauchy's
/// theorem.
pub fn witness_normal_case(
    inst: &DiagonalInstance,
) -> Result<(PermGroup, PermGroup), DiagonalError> {
    let p = inst.prime_index()?;
    if !inst.u.is_normal_in(&inst.v)? {
        return Err(DiagonalError::PreconditionFailed("U is not normal in V"));
    }
    lift_order_p_step(&inst.u, &inst.v, p)
}

/// Case (ii): `V` nilpotent with `p | [V:U]`. Ascends the normalizer chain
/// `U = N_0 ≤ N_1 ≤ …` (which reaches `V` by nilpotency), finds the first
/// step with `p | [N_{i+1}:N_i]` and applies case (i) inside that step.
pub fn witness_nilpotent_case(
    inst: &DiagonalInstance,
) -> Result<(PermGroup, PermGroup), DiagonalError> {
    let p = inst.prime_index()?;
    if !inst.v.is_nilpotent()? {
        return Err(DiagonalError::PreconditionFailed("V is not nilpotent"));
    }
    ascend_normalizer_chain(&inst.u, &inst.v, p)
}

/// Case (iii): `U` a p-group with `p | [V:U]`. Takes a Sylow p-subgroup
/// `P ⊇ U` (then `p | [P:U]`) and applies case (ii) inside `P`, which is
/// nilpotent as a p-group.
pub fn witness_pgroup_case(
    inst: &DiagonalInstance,
) -> Result<(PermGroup, PermGroup), DiagonalError> {
    let p = inst.prime_index()?;
    if !inst.u.is_p_group(p) {
        return Err(DiagonalError::PreconditionFailed("U is not a p-group"));
    }
    if (inst.v.order() / inst.u.order()) % (p as usize) != 0 {
        return Err(DiagonalError::PreconditionFailed("p does not divide [V:U]"));
    }
    let sylow = inst.v.sylow_subgroup_containing(&inst.u, p)?;
    ascend_normalizer_chain(&inst.u, &sylow, p)
}

/// Shared chain step for cases (ii) and (iii): walk normalizers from
/// `bottom` towards `top` until a step with index divisible by `p` appears,
/// then lift an order-p coset of that step's quotient.
fn ascend_normalizer_chain(
    bottom: &PermGroup,
    top: &PermGroup,
    p: u64,
) -> Result<(PermGroup, PermGroup), DiagonalError> {
    if (top.order() / bottom.order()) % (p as usize) != 0 {
        return Err(DiagonalError::PreconditionFailed("p does not divide [V:U]"));
    }
    let mut current = bottom.clone();
    loop {
        let next = current.normalizer_in(top)?;
        if next.order() == current.order() {
            // The normalizer chain stalls only in non-nilpotent groups,
            // which the preconditions exclude.
            return Err(DiagonalError::PreconditionFailed(
                "normalizer chain stalled before reaching V",
            ));
        }
        if (next.order() / current.order()) % (p as usize) == 0 {
            return lift_order_p_step(&current, &next, p);
        }
        current = next;
    }
}

/// Given `n ⊴ h` with `p | [h:n]`, returns `(n, r)` where `r/n` is cyclic
/// of order p (preimage of a Cauchy subgroup of `h/n`).
fn lift_order_p_step(
    n: &PermGroup,
    h: &PermGroup,
    p: u64,
) -> Result<(PermGroup, PermGroup), DiagonalError> {
    if (h.order() / n.order()) % (p as usize) != 0 {
        return Err(DiagonalError::PreconditionFailed("p does not divide [V:U]"));
    }
    let quotient = QuotientGroup::new(h, n)?;
    let coset = quotient
        .coset_of_order(p)
        .expect("Cauchy's theorem yields an order-p coset");
    let mut gens: Vec<_> = n.generators().to_vec();
    gens.push(quotient.coset_rep(coset).clone());
    let r = PermGroup::generate_capped(h.degree(), gens, h.order())
        .expect("preimage subgroup stays within the ambient group");
    Ok((n.clone(), r))
}

/// Builds a checked `Diagonal` report from a witness pair produced by one
/// of the constructive cases.
pub fn witness_report(
    inst: &DiagonalInstance,
    n: &PermGroup,
    r: &PermGroup,
) -> Result<DecisionReport, DiagonalError> {
    let witness = construct_from_nr(inst, n, r)?;
    Ok(DecisionReport {
        verdict: Verdict::Diagonal,
        method: DecisionMethod::WitnessConstruction,
        witness: Some(witness),
        witness_pair: Some((n.clone(), r.clone())),
        certificate_checked: true,
        scanned: None,
    })
}

/// Full decision: the maximal-non-normal criterion, then the prime-index
/// criterion, then exhaustive search, in that fixed order so reports are
/// reproducible. Every `Diagonal` verdict carries a checked witness.
pub fn decide(inst: &DiagonalInstance, caps: &Caps) -> Result<DecisionReport, DiagonalError> {
    if let Some(report) = criterion_max_nonnormal(inst)? {
        return Ok(report);
    }
    if let Some(report) = criterion_index(inst, caps)? {
        return Ok(report);
    }
    decide_brute(inst, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn instance(s: PermGroup, t: PermGroup, u: PermGroup, v: PermGroup) -> DiagonalInstance {
        DiagonalInstance::new(s, t, u, v, &Caps::default()).unwrap()
    }

    fn c2_c2_instance() -> DiagonalInstance {
        let c2 = PermGroup::cyclic(2);
        instance(
            PermGroup::trivial(2),
            c2.clone(),
            PermGroup::trivial(2),
            c2,
        )
    }

    #[test]
    fn is_diagonal_corners() {
        let inst = c2_c2_instance();
        assert!(!is_diagonal(inst.product().group(), &inst).unwrap());
        assert!(!is_diagonal(&inst.s_x_v, &inst).unwrap());
        let diag = PermGroup::generate_capped(4, alloc::vec![perm(4, &[&[1, 2], &[3, 4]])], 4)
            .unwrap();
        assert!(is_diagonal(&diag, &inst).unwrap());
        // T×U itself is intermediate but not diagonal.
        assert!(!is_diagonal(&inst.t_x_u, &inst).unwrap());
        // A group outside the sandwich is rejected.
        let s4 = PermGroup::symmetric(4);
        assert!(matches!(
            is_diagonal(&s4, &inst),
            Err(DiagonalError::NotIntermediate)
        ));
    }

    #[test]
    fn brute_force_examples() {
        let caps = Caps::default();
        let inst = c2_c2_instance();
        let report = decide_brute(&inst, &caps).unwrap();
        assert_eq!(report.verdict, Verdict::Diagonal);
        assert_eq!(report.witness.as_ref().unwrap().order(), 2);

        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate_capped(3, alloc::vec![perm(3, &[&[1, 2]])], 6).unwrap();
        let inst2 = instance(
            s2,
            s3,
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
        );
        assert_eq!(decide_brute(&inst2, &caps).unwrap().verdict, Verdict::NoDiagonal);

        let inst3 = instance(
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
            PermGroup::trivial(3),
            PermGroup::cyclic(3),
        );
        assert_eq!(decide_brute(&inst3, &caps).unwrap().verdict, Verdict::NoDiagonal);
    }

    #[test]
    fn criterion_a_examples() {
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate_capped(3, alloc::vec![perm(3, &[&[1, 2]])], 6).unwrap();
        let inst = instance(s2, s3, PermGroup::trivial(2), PermGroup::cyclic(2));
        let report = criterion_max_nonnormal(&inst).unwrap().unwrap();
        assert_eq!(report.verdict, Verdict::NoDiagonal);
        assert_eq!(report.method, DecisionMethod::MaxNonNormal);

        // S normal: inapplicable.
        assert!(criterion_max_nonnormal(&c2_c2_instance()).unwrap().is_none());

        // S not maximal: inapplicable.
        let inst3 = instance(
            PermGroup::trivial(4),
            PermGroup::cyclic(4),
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
        );
        assert!(criterion_max_nonnormal(&inst3).unwrap().is_none());
    }

    #[test]
    fn criterion_b_examples() {
        let caps = Caps::default();
        // p = 2 does not divide [C_3 : 1] = 3.
        let inst = instance(
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
            PermGroup::trivial(3),
            PermGroup::cyclic(3),
        );
        let report = criterion_index(&inst, &caps).unwrap().unwrap();
        assert_eq!(report.verdict, Verdict::NoDiagonal);

        let report2 = criterion_index(&c2_c2_instance(), &caps).unwrap().unwrap();
        assert_eq!(report2.verdict, Verdict::Diagonal);
        assert!(report2.certificate_checked);

        // (1, C_3, S_2, S_3): [V:U] = 3 is divisible by p = 3, yet the only
        // candidate pair (S_2, S_3) fails normality.
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate_capped(3, alloc::vec![perm(3, &[&[1, 2]])], 6).unwrap();
        let inst3 = instance(PermGroup::trivial(3), PermGroup::cyclic(3), s2, s3);
        let report3 = criterion_index(&inst3, &caps).unwrap().unwrap();
        assert_eq!(report3.verdict, Verdict::NoDiagonal);
    }

    #[test]
    fn construct_witness() {
        let inst = c2_c2_instance();
        let n = PermGroup::trivial(2);
        let r = PermGroup::cyclic(2);
        let g = construct_from_nr(&inst, &n, &r).unwrap();
        assert_eq!(g.order(), 2);
        assert!(is_diagonal(&g, &inst).unwrap());

        // Two distinct diagonals of C_3 × C_3 from the two choices of φ:
        // construct_from_nr picks one; the enumeration sees both.
        let c3 = PermGroup::cyclic(3);
        let inst3 = instance(
            PermGroup::trivial(3),
            c3.clone(),
            PermGroup::trivial(3),
            c3,
        );
        let g3 = construct_from_nr(&inst3, &PermGroup::trivial(3), &PermGroup::cyclic(3)).unwrap();
        assert_eq!(g3.order(), 3);
        assert!(is_diagonal(&g3, &inst3).unwrap());
    }

    #[test]
    fn invalid_witness_rejected() {
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate_capped(3, alloc::vec![perm(3, &[&[1, 2]])], 6).unwrap();
        // N = S_2 is not normal in R = S_3.
        let inst = instance(
            PermGroup::trivial(3),
            PermGroup::cyclic(3),
            s2.clone(),
            s3.clone(),
        );
        assert!(matches!(
            construct_from_nr(&inst, &s2, &s3),
            Err(DiagonalError::InvalidWitness(_))
        ));
    }

    #[test]
    fn witness_cases() {
        // (i) V = C_2, U = 1, p = 2.
        let inst = c2_c2_instance();
        let (n, r) = witness_normal_case(&inst).unwrap();
        assert!(n.is_trivial());
        assert_eq!(r.order(), 2);
        let report = witness_report(&inst, &n, &r).unwrap();
        assert_eq!(report.method, DecisionMethod::WitnessConstruction);
        assert_eq!(report.verdict, Verdict::Diagonal);

        // (ii) V = C_4, U = 1: first chain step is already 1 ≤ C_4.
        let inst2 = instance(
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
            PermGroup::trivial(4),
            PermGroup::cyclic(4),
        );
        let (n2, r2) = witness_nilpotent_case(&inst2).unwrap();
        assert!(n2.is_trivial());
        assert_eq!(r2.order(), 2);
        let g2 = construct_from_nr(&inst2, &n2, &r2).unwrap();
        assert!(is_diagonal(&g2, &inst2).unwrap());

        // (iii) V = D_4, U a non-central order-2 subgroup, p = 2.
        let d4 = PermGroup::dihedral(4);
        let u = PermGroup::generate_capped(4, alloc::vec![perm(4, &[&[1, 3]])], 8).unwrap();
        let inst3 = instance(PermGroup::trivial(2), PermGroup::cyclic(2), u, d4);
        let (n3, r3) = witness_pgroup_case(&inst3).unwrap();
        assert_eq!(r3.order(), n3.order() * 2);
        let g3 = construct_from_nr(&inst3, &n3, &r3).unwrap();
        assert!(is_diagonal(&g3, &inst3).unwrap());
    }

    #[test]
    fn decide_pipeline() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate_capped(3, alloc::vec![perm(3, &[&[1, 2]])], 6).unwrap();
        let inst = instance(s2, s3, PermGroup::trivial(2), PermGroup::cyclic(2));
        let report = decide(&inst, &caps).unwrap();
        assert_eq!(report.verdict, Verdict::NoDiagonal);
        assert_eq!(report.method, DecisionMethod::MaxNonNormal);

        let report2 = decide(&c2_c2_instance(), &caps).unwrap();
        assert_eq!(report2.verdict, Verdict::Diagonal);
        assert_eq!(report2.method, DecisionMethod::IndexDivisibility);

        // S = 1 in T = C_4 is normal of composite index: falls through to
        // brute force and a diagonal exists (C_2 × 1 for instance).
        let inst3 = instance(
            PermGroup::trivial(4),
            PermGroup::cyclic(4),
            PermGroup::trivial(2),
            PermGroup::cyclic(2),
        );
        let report3 = decide(&inst3, &caps).unwrap();
        assert_eq!(report3.verdict, Verdict::Diagonal);
        assert_eq!(report3.method, DecisionMethod::BruteForce);
        assert!(is_diagonal(report3.witness.as_ref().unwrap(), &inst3).unwrap());
    }
}
