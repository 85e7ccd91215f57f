//! Quotient groups as explicit coset partitions with representative tables.

use alloc::vec::Vec;
use core::fmt;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

/// The quotient of a group by a normal subgroup, materialized as the
/// partition into cosets. Cosets are sorted by their least element, so
/// coset 0 is always the normal subgroup itself and all indexing is
/// canonical. Multiplication goes through representatives and is
/// well-defined by normality.
#[derive(Clone)]
pub struct QuotientGroup {
    ambient: PermGroup,
    normal: PermGroup,
    /// Per coset: canonical (least) representative and sorted elements.
    cosets: Vec<(Permutation, Vec<Permutation>)>,
    /// Element -> coset index, sorted by element for binary search.
    index: Vec<(Permutation, usize)>,
}

impl QuotientGroup {
    pub fn new(ambient: &PermGroup, normal: &PermGroup) -> Result<Self, GroupError> {
        if !normal.is_normal_in(ambient)? {
            return Err(GroupError::NotNormal);
        }
        let mut cosets: Vec<(Permutation, Vec<Permutation>)> = Vec::new();
        let mut index: Vec<(Permutation, usize)> = Vec::new();
        let mut assigned: Vec<bool> = alloc::vec![false; ambient.order()];
        for (pos, g) in ambient.elements().iter().enumerate() {
            if assigned[pos] {
                continue;
            }
            let mut members: Vec<Permutation> = normal
                .elements()
                .iter()
                .map(|n| g.compose(n))
                .collect();
            members.sort();
            let coset_idx = cosets.len();
            for m in &members {
                let p = ambient
                    .elements()
                    .binary_search(m)
                    .expect("coset members lie in the ambient group");
                assigned[p] = true;
                index.push((m.clone(), coset_idx));
            }
            cosets.push((g.clone(), members));
        }
        index.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(QuotientGroup {
            ambient: ambient.clone(),
            normal: normal.clone(),
            cosets,
            index,
        })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn normal_subgroup(&self) -> &PermGroup {
        &self.normal
    }

    /// Number of cosets.
    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset_rep(&self, i: usize) -> &Permutation {
        &self.cosets[i].0
    }

    pub fn coset_elements(&self, i: usize) -> &[Permutation] {
        &self.cosets[i].1
    }

    /// Index of the coset containing `g`, if `g` lies in the ambient group.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.index
            .binary_search_by(|(p, _)| p.cmp(g))
            .ok()
            .map(|pos| self.index[pos].1)
    }

    /// The identity coset (always index 0: the identity is lexicographically
    /// least, so the normal subgroup sorts first).
    pub fn identity_coset(&self) -> usize {
        0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let product = self.cosets[i].0.compose(&self.cosets[j].0);
        self.coset_of(&product)
            .expect("product of ambient elements stays in the ambient group")
    }

    pub fn coset_inverse(&self, i: usize) -> usize {
        self.coset_of(&self.cosets[i].0.inverse())
            .expect("inverse stays in the ambient group")
    }

    pub fn coset_pow(&self, i: usize, e: usize) -> usize {
        let mut acc = self.identity_coset();
        for _ in 0..e {
            acc = self.mul(acc, i);
        }
        acc
    }

    pub fn coset_order(&self, i: usize) -> usize {
        let mut cur = i;
        let mut k = 1;
        while cur != self.identity_coset() {
            cur = self.mul(cur, i);
            k += 1;
        }
        k
    }

    /// First coset of exact order `p` in canonical scan order (a power of
    /// the first coset whose order `p` divides).
    pub fn coset_of_order(&self, p: u64) -> Option<usize> {
        let p = p as usize;
        for i in 0..self.order() {
            let ord = self.coset_order(i);
            if ord % p == 0 {
                return Some(self.coset_pow(i, ord / p));
            }
        }
        None
    }

    /// The quotient as a permutation group via the regular action on its
    /// own cosets, for feeding into operations that need a `PermGroup`.
    pub fn to_perm_group(&self) -> PermGroup {
        let m = self.order();
        let mut perms: Vec<Permutation> = (0..m)
            .map(|i| {
                let images: Vec<usize> = (0..m).map(|j| self.mul(i, j)).collect();
                Permutation::from_images(images)
                    .expect("regular action of a quotient is a permutation")
            })
            .collect();
        perms.sort();
        PermGroup::from_sorted_unchecked(m, perms)
    }
}

impl fmt::Debug for QuotientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuotientGroup(|G|={}, |N|={}, cosets={})",
            self.ambient.order(),
            self.normal.order(),
            self.cosets.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn quotient_orders() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let a3 = PermGroup::generate(3, vec![perm(3, &[&[1, 2, 3]])], &caps).unwrap();
        let q = QuotientGroup::new(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);

        let triv = PermGroup::trivial(3);
        assert_eq!(QuotientGroup::new(&s3, &triv).unwrap().order(), 6);
        assert_eq!(QuotientGroup::new(&s3, &s3).unwrap().order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::generate(3, vec![perm(3, &[&[1, 2]])], &caps).unwrap();
        assert!(matches!(
            QuotientGroup::new(&s3, &s2),
            Err(GroupError::NotNormal)
        ));
    }

    #[test]
    fn multiplication_is_representative_independent() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3);
        let a3 = PermGroup::generate(3, vec![perm(3, &[&[1, 2, 3]])], &caps).unwrap();
        let q = QuotientGroup::new(&s3, &a3).unwrap();
        for i in 0..q.order() {
            for j in 0..q.order() {
                let expected = q.mul(i, j);
                for gi in q.coset_elements(i) {
                    for gj in q.coset_elements(j) {
                        assert_eq!(q.coset_of(&gi.compose(gj)), Some(expected));
                    }
                }
            }
        }
    }

    #[test]
    fn regular_action() {
        let caps = Caps::default();
        let c4 = PermGroup::cyclic(4);
        let c2 = PermGroup::generate(4, vec![perm(4, &[&[1, 3], &[2, 4]])], &caps).unwrap();
        let q = QuotientGroup::new(&c4, &c2).unwrap();
        let as_group = q.to_perm_group();
        assert_eq!(as_group.order(), 2);
        assert_eq!(as_group.degree(), 2);
    }

    #[test]
    fn coset_orders_and_cauchy() {
        let caps = Caps::default();
        let c6 = PermGroup::cyclic(6);
        let q = QuotientGroup::new(&c6, &PermGroup::trivial(6)).unwrap();
        let idx = q.coset_of_order(3).unwrap();
        assert_eq!(q.coset_order(idx), 3);
        let c2 = PermGroup::generate(6, vec![perm(6, &[&[1, 4], &[2, 5], &[3, 6]])], &caps)
            .unwrap();
        let q2 = QuotientGroup::new(&c6, &c2).unwrap();
        assert_eq!(q2.order(), 3);
        assert!(q2.coset_of_order(3).is_some());
        assert!(q2.coset_of_order(2).is_none());
    }
}
