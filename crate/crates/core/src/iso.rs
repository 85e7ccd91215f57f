//! Exhaustive isomorphism search between small finite groups.
//!
//! Groups are flattened to multiplication tables; candidate maps are built by
//! assigning images to a greedy generating sequence and propagating the
//! homomorphism condition, so the search prunes far below the factorial
//! worst case while still returning every isomorphism.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{Caps, GroupError, PermGroup};
use crate::quotient::QuotientGroup;

/// An explicit isomorphism between two groups given by canonical element
/// indexing: element `i` of the source maps to element `map[i]` of the
/// target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

/// Multiplication table of a finite group over indices `0..n`.
pub(crate) struct MulTable {
    n: usize,
    mul: Vec<usize>,
    orders: Vec<usize>,
    identity: usize,
}

impl MulTable {
    pub(crate) fn from_perm_group(g: &PermGroup) -> Self {
        let n = g.order();
        let elements = g.elements();
        let mut mul = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = elements[i].compose(&elements[j]);
                mul[i * n + j] = elements
                    .binary_search(&prod)
                    .expect("group is closed under composition");
            }
        }
        let identity = elements
            .iter()
            .position(|e| e.is_identity())
            .expect("group contains the identity");
        Self::finish(n, mul, identity)
    }

    pub(crate) fn from_quotient(q: &QuotientGroup) -> Self {
        let n = q.order();
        let mut mul = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = q.mul(i, j);
            }
        }
        Self::finish(n, mul, q.identity_coset())
    }

    fn finish(n: usize, mul: Vec<usize>, identity: usize) -> Self {
        let mut table = MulTable {
            n,
            mul,
            orders: Vec::new(),
            identity,
        };
        table.orders = (0..n)
            .map(|i| {
                let mut cur = i;
                let mut k = 1;
                while cur != identity {
                    cur = table.mul(cur, i);
                    k += 1;
                }
                k
            })
            .collect();
        table
    }

    #[inline]
    fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j]
    }

    /// Greedy generating sequence: repeatedly adjoin the least element
    /// outside the subgroup generated so far.
    fn generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = self.closure(&gens);
        for i in 0..self.n {
            if reached.iter().filter(|&&r| r).count() == self.n {
                break;
            }
            if !reached[i] {
                gens.push(i);
                reached = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reached = vec![false; self.n];
        reached[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !reached[b] {
                    reached[b] = true;
                    frontier.push(b);
                }
            }
        }
        reached
    }
}

/// Propagates generator images to a partial homomorphism on the generated
/// subgroup; `None` on any multiplicative or injectivity conflict.
fn propagate(a: &MulTable, b: &MulTable, gens: &[usize], imgs: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut img: Vec<Option<usize>> = vec![None; a.n];
    let mut used = vec![false; b.n];
    img[a.identity] = Some(b.identity);
    used[b.identity] = true;
    let mut frontier = vec![a.identity];
    while let Some(x) = frontier.pop() {
        let fx = img[x].expect("frontier elements are mapped");
        for (&g, &h) in gens.iter().zip(imgs.iter()) {
            let xg = a.mul(x, g);
            let fxh = b.mul(fx, h);
            match img[xg] {
                None => {
                    if used[fxh] {
                        return None; // not injective
                    }
                    img[xg] = Some(fxh);
                    used[fxh] = true;
                    frontier.push(xg);
                }
                Some(existing) => {
                    if existing != fxh {
                        return None; // not multiplicative
                    }
                }
            }
        }
    }
    Some(img)
}

pub(crate) fn table_isomorphisms(a: &MulTable, b: &MulTable) -> Vec<Vec<usize>> {
    if a.n != b.n {
        return Vec::new();
    }
    let mut orders_a = a.orders.clone();
    let mut orders_b = b.orders.clone();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return Vec::new();
    }
    let gens = a.generating_sequence();
    let mut found = Vec::new();
    let mut imgs = Vec::new();
    search(a, b, &gens, &mut imgs, &mut found);
    found
}

fn search(
    a: &MulTable,
    b: &MulTable,
    gens: &[usize],
    imgs: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if imgs.len() == gens.len() {
        if let Some(img) = propagate(a, b, gens, imgs) {
            if img.iter().all(|x| x.is_some()) {
                found.push(img.into_iter().map(|x| x.expect("checked")).collect());
            }
        }
        return;
    }
    let g = gens[imgs.len()];
    for h in 0..b.n {
        if b.orders[h] != a.orders[g] {
            continue;
        }
        imgs.push(h);
        // Propagate the partial assignment before descending.
        if propagate(a, b, &gens[..imgs.len()], imgs).is_some() {
            search(a, b, gens, imgs, found);
        }
        imgs.pop();
    }
}

/// All isomorphisms between two permutation groups, as explicit bijections
/// of the canonical element lists. Empty iff the groups are non-isomorphic.
pub fn find_isomorphisms(
    a: &PermGroup,
    b: &PermGroup,
    caps: &Caps,
) -> Result<Vec<Isomorphism>, GroupError> {
    if a.order() > caps.iso || b.order() > caps.iso {
        return Err(GroupError::CapExceeded {
            what: "isomorphism search",
            cap: caps.iso,
        });
    }
    let ta = MulTable::from_perm_group(a);
    let tb = MulTable::from_perm_group(b);
    Ok(table_isomorphisms(&ta, &tb)
        .into_iter()
        .map(|map| Isomorphism { map })
        .collect())
}

/// All isomorphisms between two quotient groups, as coset-index bijections.
pub fn find_coset_isomorphisms(
    a: &QuotientGroup,
    b: &QuotientGroup,
    caps: &Caps,
) -> Result<Vec<Vec<usize>>, GroupError> {
    if a.order() > caps.iso || b.order() > caps.iso {
        return Err(GroupError::CapExceeded {
            what: "isomorphism search",
            cap: caps.iso,
        });
    }
    let ta = MulTable::from_quotient(a);
    let tb = MulTable::from_quotient(b);
    Ok(table_isomorphisms(&ta, &tb))
}
