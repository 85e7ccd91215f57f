//! The correspondence between subgroups of a direct product `A × B` and
//! quintuples `(A1, A2, B1, B2, φ)`, where `A1 ⊴ A2 ≤ A`, `B1 ⊴ B2 ≤ B`
//! and `φ: A2/A1 → B2/B1` is an isomorphism. A quintuple maps to
//! `G = {(a, b) ∈ A2 × B2 | φ(a·A1) = b·B1}`, and every subgroup of the
//! product arises from exactly one quintuple, which powers the exhaustive
//! enumeration here.

use alloc::vec::Vec;
use core::fmt;

use crate::group::{Caps, GroupError, PermGroup};
use crate::iso::find_coset_isomorphisms;
use crate::perm::Permutation;
use crate::quotient::QuotientGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoursatError {
    Group(GroupError),
    InvalidQuintuple(&'static str),
    NotASubgroupOfProduct,
}

impl fmt::Display for GoursatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoursatError::Group(e) => write!(f, "{e}"),
            GoursatError::InvalidQuintuple(why) => write!(f, "invalid quintuple: {why}"),
            GoursatError::NotASubgroupOfProduct => {
                write!(f, "group is not a subgroup of the product")
            }
        }
    }
}

impl core::error::Error for GoursatError {}

impl From<GroupError> for GoursatError {
    fn from(e: GroupError) -> Self {
        GoursatError::Group(e)
    }
}

/// The quintuple datum classifying a subgroup of `A × B`. The isomorphism
/// `φ` is stored as an explicit coset-representative table — pairs
/// `(canonical rep of a coset of A1 in A2, canonical rep of its image coset
/// of B1 in B2)` — since only small quotients occur and tables are trivially
/// checkable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quintuple {
    pub a1: PermGroup,
    pub a2: PermGroup,
    pub b1: PermGroup,
    pub b2: PermGroup,
    pub phi: Vec<(Permutation, Permutation)>,
}

/// A direct product `A × B`, realized as a permutation group on the
/// disjoint union of the two domains: `A` acts on the first block of
/// points, `B` on the second.
#[derive(Clone, Debug)]
pub struct ProductGroup {
    left: PermGroup,
    right: PermGroup,
    group: PermGroup,
}

impl ProductGroup {
    pub fn new(left: PermGroup, right: PermGroup, caps: &Caps) -> Result<Self, GoursatError> {
        let order = left.order() * right.order();
        if order > caps.closure {
            return Err(GroupError::CapExceeded {
                what: "product group construction",
                cap: caps.closure,
            }
            .into());
        }
        let degree = left.degree() + right.degree();
        let mut elements = Vec::with_capacity(order);
        for a in left.elements() {
            for b in right.elements() {
                elements.push(embed_parts(a, b));
            }
        }
        elements.sort();
        let group = PermGroup::from_sorted_unchecked(degree, elements);
        Ok(ProductGroup { left, right, group })
    }

    pub fn left(&self) -> &PermGroup {
        &self.left
    }

    pub fn right(&self) -> &PermGroup {
        &self.right
    }

    /// The full product as a permutation group on the disjoint union.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn embed(&self, a: &Permutation, b: &Permutation) -> Result<Permutation, GoursatError> {
        if a.degree() != self.left.degree() || b.degree() != self.right.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.left.degree(),
                found: a.degree(),
            }
            .into());
        }
        Ok(embed_parts(a, b))
    }

    /// `H_A × H_B` as a subgroup of the product.
    pub fn embed_pair_subgroup(
        &self,
        ha: &PermGroup,
        hb: &PermGroup,
    ) -> Result<PermGroup, GoursatError> {
        if !ha.is_subgroup_of(&self.left) || !hb.is_subgroup_of(&self.right) {
            return Err(GroupError::NotASubgroup.into());
        }
        let mut elements = Vec::with_capacity(ha.order() * hb.order());
        for a in ha.elements() {
            for b in hb.elements() {
                elements.push(embed_parts(a, b));
            }
        }
        elements.sort();
        Ok(PermGroup::from_sorted_unchecked(self.degree(), elements))
    }

    fn left_part(&self, p: &Permutation) -> Permutation {
        let m = self.left.degree();
        Permutation::from_images(p.images()[..m].to_vec())
            .expect("product elements preserve the left block")
    }

    fn right_part(&self, p: &Permutation) -> Permutation {
        let m = self.left.degree();
        Permutation::from_images(p.images()[m..].iter().map(|&i| i - m).collect())
            .expect("product elements preserve the right block")
    }

    /// Image of the projection `A × B → A` restricted to `sub`.
    pub fn project_left(&self, sub: &PermGroup) -> Result<PermGroup, GoursatError> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(GoursatError::NotASubgroupOfProduct);
        }
        let mut parts: Vec<Permutation> = sub.elements().iter().map(|p| self.left_part(p)).collect();
        parts.sort();
        parts.dedup();
        Ok(PermGroup::from_sorted_unchecked(self.left.degree(), parts))
    }

    pub fn project_right(&self, sub: &PermGroup) -> Result<PermGroup, GoursatError> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(GoursatError::NotASubgroupOfProduct);
        }
        let mut parts: Vec<Permutation> =
            sub.elements().iter().map(|p| self.right_part(p)).collect();
        parts.sort();
        parts.dedup();
        Ok(PermGroup::from_sorted_unchecked(self.right.degree(), parts))
    }

    /// The quintuple corresponding to a subgroup of the product: the images
    /// of the two restricted projections, the kernels of the opposite
    /// projections, and the induced coset bijection.
    pub fn quintuple_from_subgroup(&self, sub: &PermGroup) -> Result<Quintuple, GoursatError> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(GoursatError::NotASubgroupOfProduct);
        }
        let a2 = self.project_left(sub)?;
        let b2 = self.project_right(sub)?;
        let mut a1_elements: Vec<Permutation> = sub
            .elements()
            .iter()
            .filter(|p| self.right_part(p).is_identity())
            .map(|p| self.left_part(p))
            .collect();
        a1_elements.sort();
        let a1 = PermGroup::from_sorted_unchecked(self.left.degree(), a1_elements);
        let mut b1_elements: Vec<Permutation> = sub
            .elements()
            .iter()
            .filter(|p| self.left_part(p).is_identity())
            .map(|p| self.right_part(p))
            .collect();
        b1_elements.sort();
        let b1 = PermGroup::from_sorted_unchecked(self.right.degree(), b1_elements);

        let qa = QuotientGroup::new(&a2, &a1)?;
        let qb = QuotientGroup::new(&b2, &b1)?;
        let mut image: Vec<Option<usize>> = alloc::vec![None; qa.order()];
        for g in sub.elements() {
            let i = qa
                .coset_of(&self.left_part(g))
                .expect("left part lies in the projection");
            let j = qb
                .coset_of(&self.right_part(g))
                .expect("right part lies in the projection");
            match image[i] {
                None => image[i] = Some(j),
                Some(prev) => debug_assert_eq!(prev, j, "induced coset map must be well-defined"),
            }
        }
        let phi = image
            .iter()
            .enumerate()
            .map(|(i, j)| {
                let j = j.expect("projection is onto, so every coset is hit");
                (qa.coset_rep(i).clone(), qb.coset_rep(j).clone())
            })
            .collect();
        Ok(Quintuple { a1, a2, b1, b2, phi })
    }

    /// The subgroup `{(a, b) ∈ A2 × B2 | φ(a·A1) = b·B1}` defined by a
    /// quintuple, after validating it.
    pub fn subgroup_from_quintuple(&self, q: &Quintuple) -> Result<PermGroup, GoursatError> {
        let (qa, qb, coset_map) = self.validate_quintuple(q)?;
        Ok(self.build_subgroup(&qa, &qb, &coset_map))
    }

    /// Checks the quintuple invariants and returns the two quotients plus
    /// the coset-index form of `φ`.
    fn validate_quintuple(
        &self,
        q: &Quintuple,
    ) -> Result<(QuotientGroup, QuotientGroup, Vec<usize>), GoursatError> {
        if !q.a2.is_subgroup_of(&self.left) || !q.a1.is_subgroup_of(&q.a2) {
            return Err(GoursatError::InvalidQuintuple("A1 ≤ A2 ≤ A fails"));
        }
        if !q.b2.is_subgroup_of(&self.right) || !q.b1.is_subgroup_of(&q.b2) {
            return Err(GoursatError::InvalidQuintuple("B1 ≤ B2 ≤ B fails"));
        }
        if !q.a1.is_normal_in(&q.a2)? {
            return Err(GoursatError::InvalidQuintuple("A1 not normal in A2"));
        }
        if !q.b1.is_normal_in(&q.b2)? {
            return Err(GoursatError::InvalidQuintuple("B1 not normal in B2"));
        }
        let qa = QuotientGroup::new(&q.a2, &q.a1)?;
        let qb = QuotientGroup::new(&q.b2, &q.b1)?;
        if qa.order() != qb.order() || q.phi.len() != qa.order() {
            return Err(GoursatError::InvalidQuintuple(
                "φ table size does not match the quotients",
            ));
        }
        let mut coset_map: Vec<Option<usize>> = alloc::vec![None; qa.order()];
        let mut hit = alloc::vec![false; qb.order()];
        for (pa, pb) in &q.phi {
            let i = qa
                .coset_of(pa)
                .ok_or(GoursatError::InvalidQuintuple("φ key outside A2"))?;
            let j = qb
                .coset_of(pb)
                .ok_or(GoursatError::InvalidQuintuple("φ value outside B2"))?;
            if coset_map[i].is_some() || hit[j] {
                return Err(GoursatError::InvalidQuintuple("φ is not a bijection"));
            }
            coset_map[i] = Some(j);
            hit[j] = true;
        }
        let coset_map: Vec<usize> = coset_map
            .into_iter()
            .map(|x| x.expect("bijection covers every coset"))
            .collect();
        for i in 0..qa.order() {
            for j in 0..qa.order() {
                if coset_map[qa.mul(i, j)] != qb.mul(coset_map[i], coset_map[j]) {
                    return Err(GoursatError::InvalidQuintuple("φ is not a homomorphism"));
                }
            }
        }
        Ok((qa, qb, coset_map))
    }

    fn build_subgroup(
        &self,
        qa: &QuotientGroup,
        qb: &QuotientGroup,
        coset_map: &[usize],
    ) -> PermGroup {
        let mut elements = Vec::new();
        for (i, &j) in coset_map.iter().enumerate() {
            for a in qa.coset_elements(i) {
                for b in qb.coset_elements(j) {
                    elements.push(embed_parts(a, b));
                }
            }
        }
        elements.sort();
        PermGroup::from_sorted_unchecked(self.degree(), elements)
    }

    /// All subgroups of the product, one per quintuple: normal pairs on
    /// each side, matched through every quotient isomorphism. The result is
    /// deduplicated by canonical form as a safety assertion (the
    /// correspondence makes duplicates impossible) and canonically sorted.
    pub fn enumerate_subgroups(&self, caps: &Caps) -> Result<Vec<PermGroup>, GoursatError> {
        Ok(self
            .enumerate_quintuples(caps)?
            .into_iter()
            .map(|(_, g)| g)
            .collect())
    }

    /// Like [`enumerate_subgroups`](Self::enumerate_subgroups) but keeps
    /// each quintuple next to the subgroup it defines.
    pub fn enumerate_quintuples(
        &self,
        caps: &Caps,
    ) -> Result<Vec<(Quintuple, PermGroup)>, GoursatError> {
        let subs_a = self.left.all_subgroups(caps)?;
        let subs_b = self.right.all_subgroups(caps)?;
        let sections_a = sections(&subs_a)?;
        let sections_b = sections(&subs_b)?;

        let mut out: Vec<(Quintuple, PermGroup)> = Vec::new();
        let mut seen: alloc::collections::BTreeSet<Vec<Permutation>> =
            alloc::collections::BTreeSet::new();
        for (a1, a2, qa) in &sections_a {
            for (b1, b2, qb) in &sections_b {
                if qa.order() != qb.order() {
                    continue;
                }
                for coset_map in find_coset_isomorphisms(qa, qb, caps)? {
                    let subgroup = self.build_subgroup(qa, qb, &coset_map);
                    assert!(
                        seen.insert(subgroup.elements().to_vec()),
                        "the quintuple correspondence is bijective; a duplicate subgroup \
                         indicates a bug"
                    );
                    let phi = coset_map
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| (qa.coset_rep(i).clone(), qb.coset_rep(j).clone()))
                        .collect();
                    let quintuple = Quintuple {
                        a1: a1.clone(),
                        a2: a2.clone(),
                        b1: b1.clone(),
                        b2: b2.clone(),
                        phi,
                    };
                    out.push((quintuple, subgroup));
                }
            }
        }
        out.sort_by(|x, y| x.1.cmp(&y.1));
        Ok(out)
    }
}

fn embed_parts(a: &Permutation, b: &Permutation) -> Permutation {
    let m = a.degree();
    let mut images = Vec::with_capacity(m + b.degree());
    images.extend(a.images().iter().copied());
    images.extend(b.images().iter().map(|&i| i + m));
    Permutation::from_images(images).expect("block-wise images form a permutation")
}

/// All pairs `(N, H)` with `N ⊴ H` drawn from a subgroup list, with their
/// quotients.
fn sections(
    subs: &[PermGroup],
) -> Result<Vec<(PermGroup, PermGroup, QuotientGroup)>, GoursatError> {
    let mut out = Vec::new();
    for h in subs {
        for n in subs {
            if n.is_subgroup_of(h) && n.is_normal_in(h)? {
                out.push((n.clone(), h.clone(), QuotientGroup::new(h, n)?));
            }
        }
    }
    Ok(out)
}

/// All subgroups of `A × B`, enumerated through the quintuple
/// correspondence.
pub fn enumerate_product_subgroups(
    a: &PermGroup,
    b: &PermGroup,
    caps: &Caps,
) -> Result<Vec<PermGroup>, GoursatError> {
    ProductGroup::new(a.clone(), b.clone(), caps)?.enumerate_subgroups(caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn product_order_and_projections() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let c2 = PermGroup::cyclic(2);
        let prod = ProductGroup::new(s3.clone(), c2.clone(), &caps).unwrap();
        assert_eq!(prod.group().order(), 12);
        assert_eq!(prod.degree(), 5);
        assert_eq!(prod.project_left(prod.group()).unwrap(), s3);
        assert_eq!(prod.project_right(prod.group()).unwrap(), c2);
    }

    #[test]
    fn full_product_quintuple() {
        let caps = Caps::default();
        let a = PermGroup::cyclic(2);
        let b = PermGroup::cyclic(3);
        let prod = ProductGroup::new(a.clone(), b.clone(), &caps).unwrap();
        let q = prod.quintuple_from_subgroup(prod.group()).unwrap();
        assert_eq!(q.a1, a);
        assert_eq!(q.a2, a);
        assert_eq!(q.b1, b);
        assert_eq!(q.b2, b);
        assert_eq!(q.phi.len(), 1);
        let rebuilt = prod.subgroup_from_quintuple(&q).unwrap();
        assert_eq!(&rebuilt, prod.group());
    }

    #[test]
    fn diagonal_of_c2_c2() {
        let caps = Caps::default();
        let c2 = PermGroup::cyclic(2);
        let prod = ProductGroup::new(c2.clone(), c2.clone(), &caps).unwrap();
        let q = Quintuple {
            a1: PermGroup::trivial(2),
            a2: c2.clone(),
            b1: PermGroup::trivial(2),
            b2: c2.clone(),
            phi: alloc::vec![
                (Permutation::identity(2), Permutation::identity(2)),
                (perm(2, &[&[1, 2]]), perm(2, &[&[1, 2]])),
            ],
        };
        let g = prod.subgroup_from_quintuple(&q).unwrap();
        assert_eq!(g.order(), 2);
        // The diagonal {(e,e), (g,h)} embeds as (1 2)(3 4).
        assert!(g.contains(&perm(4, &[&[1, 2], &[3, 4]])));
        // Round trip.
        let q2 = prod.quintuple_from_subgroup(&g).unwrap();
        let g2 = prod.subgroup_from_quintuple(&q2).unwrap();
        assert_eq!(g, g2);
        assert!(q2.a1.is_trivial());
        assert_eq!(q2.a2, c2);
    }

    #[test]
    fn order_formula() {
        // |G| = |A2| · |B1| for every subgroup of S_3 × C_2.
        let caps = Caps::default();
        let prod =
            ProductGroup::new(PermGroup::symmetric(3), PermGroup::cyclic(2), &caps).unwrap();
        for g in prod.enumerate_subgroups(&caps).unwrap() {
            let q = prod.quintuple_from_subgroup(&g).unwrap();
            assert_eq!(g.order(), q.a2.order() * q.b1.order());
        }
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        let c2 = PermGroup::cyclic(2);
        let c3 = PermGroup::cyclic(3);
        assert_eq!(enumerate_product_subgroups(&c2, &c2, &caps).unwrap().len(), 5);
        assert_eq!(enumerate_product_subgroups(&c3, &c3, &caps).unwrap().len(), 6);
        // Degenerate factor: subgroups of A × 1 are exactly the H × 1.
        let trivial = PermGroup::trivial(1);
        let s3 = PermGroup::symmetric(3);
        assert_eq!(
            enumerate_product_subgroups(&s3, &trivial, &caps).unwrap().len(),
            s3.all_subgroups(&caps).unwrap().len()
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let c2 = PermGroup::cyclic(2);
        let prod = ProductGroup::new(s3, c2, &caps).unwrap();
        let via_quintuples = prod.enumerate_subgroups(&caps).unwrap();
        let brute = prod.group().all_subgroups(&caps).unwrap();
        assert_eq!(via_quintuples, brute);
    }

    #[test]
    fn invalid_quintuples_rejected() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let c3 = PermGroup::generate(3, alloc::vec![perm(3, &[&[1, 2, 3]])], &caps).unwrap();
        let s2 = PermGroup::generate(3, alloc::vec![perm(3, &[&[1, 2]])], &caps).unwrap();
        let prod = ProductGroup::new(s3.clone(), s3.clone(), &caps).unwrap();
        // S_2 is not normal in S_3.
        let q = Quintuple {
            a1: s2.clone(),
            a2: s3.clone(),
            b1: c3.clone(),
            b2: s3.clone(),
            phi: alloc::vec![
                (Permutation::identity(3), Permutation::identity(3)),
                (perm(3, &[&[1, 3]]), perm(3, &[&[1, 2]])),
                (perm(3, &[&[1, 2, 3]]), perm(3, &[&[1, 2]])),
            ],
        };
        assert!(matches!(
            prod.subgroup_from_quintuple(&q),
            Err(GoursatError::InvalidQuintuple(_))
        ));
    }
}
