//! Finite permutation groups as explicit, canonically ordered element sets.
//!
//! Groups are stored with their full element list, sorted lexicographically
//! on image vectors. The procedures built on top (intermediate-subgroup
//! enumeration, the Goursat correspondence) need exhaustive iteration, so
//! explicit sets with enumeration caps are the representation of record.
//! Subgroup lists are canonically ordered by (order, least element list),
//! which keeps every enumeration deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::{factor_u64, is_prime_u64};
use crate::perm::Permutation;
use crate::quotient::QuotientGroup;

/// Enumeration caps. The underlying theory puts no bound on group sizes;
/// these keep the exhaustive procedures desk-scale and are overridable
/// everywhere.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Maximum order a generated group may reach during closure.
    pub closure: usize,
    /// Maximum group order accepted by exhaustive subgroup enumeration.
    pub subgroups: usize,
    /// Maximum order accepted by isomorphism search.
    pub iso: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 20_000,
            subgroups: 2_000,
            iso: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    CapExceeded { what: &'static str, cap: usize },
    InvalidPermutation(String),
    DegreeMismatch { expected: usize, found: usize },
    NotAGroup(&'static str),
    NotASubgroup,
    NotAProperSubgroup,
    NotNormal,
    NotPrime(u64),
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    NotAPGroup,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::CapExceeded { what, cap } => {
                write!(f, "cap exceeded: {what} grew past {cap}")
            }
            GroupError::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            GroupError::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            GroupError::NotAGroup(why) => write!(f, "element set is not a group: {why}"),
            GroupError::NotASubgroup => write!(f, "not a subgroup of the ambient group"),
            GroupError::NotAProperSubgroup => write!(f, "not a proper subgroup"),
            GroupError::NotNormal => write!(f, "subgroup is not normal"),
            GroupError::NotPrime(p) => write!(f, "{p} is not prime"),
            GroupError::PrimeDoesNotDivideOrder { p, order } => {
                write!(f, "prime {p} does not divide group order {order}")
            }
            GroupError::NotAPGroup => write!(f, "subgroup is not a p-group"),
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite permutation group on `{1..degree}` with its complete element
/// set. The element list is sorted and independent of the generating set,
/// so equality and ordering are canonical.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermGroup {
    /// Canonical subgroup order: degree, then order, then least element list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.elements.len().cmp(&other.elements.len()))
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl core::hash::Hash for PermGroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree={}, order={}, gens=[", self.degree, self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

/// Right-multiplication closure of the generator set, with an order cap.
fn close(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let mut set = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = p.compose(g);
            if set.insert(q.clone()) {
                if set.len() > cap {
                    return Err(GroupError::CapExceeded {
                        what: "group closure",
                        cap,
                    });
                }
                frontier.push(q);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Greedy small generating set for a sorted element list.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut reached: BTreeSet<Permutation> = BTreeSet::new();
    reached.insert(Permutation::identity(degree));
    for el in elements {
        if reached.len() == elements.len() {
            break;
        }
        if !reached.contains(el) {
            gens.push(el.clone());
            reached = close(degree, &gens, elements.len())
                .expect("closure of a subgroup's elements stays within the subgroup")
                .into_iter()
                .collect();
        }
    }
    gens
}

impl PermGroup {
    /// Generates the group spanned by `generators` inside `S_degree`,
    /// failing with `CapExceeded` if the closure grows past `caps.closure`.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        caps: &Caps,
    ) -> Result<Self, GroupError> {
        Self::generate_capped(degree, generators, caps.closure)
    }

    pub(crate) fn generate_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let elements = close(degree, &generators, cap)?;
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps an explicit element list, verifying the group axioms.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self, GroupError> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(GroupError::NotAGroup("empty element set"));
        }
        for el in &elements {
            if el.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: el.degree(),
                });
            }
        }
        if elements.binary_search(&Permutation::identity(degree)).is_err() {
            return Err(GroupError::NotAGroup("identity missing"));
        }
        for a in &elements {
            if elements.binary_search(&a.inverse()).is_err() {
                return Err(GroupError::NotAGroup("not closed under inverse"));
            }
            for b in &elements {
                if elements.binary_search(&a.compose(b)).is_err() {
                    return Err(GroupError::NotAGroup("not closed under composition"));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(degree, elements))
    }

    /// Internal constructor for element lists known to form a group
    /// (sorted, deduplicated). Computes a small generating set.
    pub(crate) fn from_sorted_unchecked(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let generators = greedy_generators(degree, &elements);
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Cyclic group of order `n` on `n` points.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let cycle: Vec<usize> = (1..=n).collect();
        let gen = Permutation::from_cycles(n, &[cycle]).expect("full cycle is valid");
        Self::generate_capped(n, vec![gen], n).expect("cyclic group closure is bounded by n")
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return Self::trivial(1);
        }
        let transposition = Permutation::from_cycles(n, &[vec![1, 2]]).expect("valid");
        let cycle: Vec<usize> = (1..=n).collect();
        let rotation = Permutation::from_cycles(n, &[cycle]).expect("valid");
        let cap = (1..=n).product::<usize>();
        Self::generate_capped(n, vec![transposition, rotation], cap)
            .expect("S_n closure is bounded by n!")
    }

    /// Dihedral group of order `2n` acting on `n` points (`n >= 3`).
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let cycle: Vec<usize> = (1..=n).collect();
        let rotation = Permutation::from_cycles(n, &[cycle]).expect("valid");
        let reflection =
            Permutation::from_images((0..n).map(|i| n - 1 - i).collect()).expect("valid");
        Self::generate_capped(n, vec![rotation, reflection], 2 * n)
            .expect("dihedral closure is bounded by 2n")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Canonically sorted element list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_proper_subgroup_of(&self, other: &PermGroup) -> bool {
        self.order() < other.order() && self.is_subgroup_of(other)
    }

    /// The conjugate subgroup `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: &Permutation) -> PermGroup {
        let g_inv = g.inverse();
        let mut elements: Vec<Permutation> = self
            .elements
            .iter()
            .map(|h| g.compose(h).compose(&g_inv))
            .collect();
        elements.sort();
        let generators = self
            .generators
            .iter()
            .map(|h| g.compose(h).compose(&g_inv))
            .collect();
        PermGroup {
            degree: self.degree,
            generators,
            elements,
        }
    }

    /// Intersection of two subgroups of a common ambient group.
    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        debug_assert_eq!(self.degree, other.degree);
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Self::from_sorted_unchecked(self.degree, elements)
    }

    /// Prime factorization of the group order.
    pub fn order_factors(&self) -> Vec<(u64, u32)> {
        factor_u64(self.order() as u64)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let factors = self.order_factors();
        factors.is_empty() || (factors.len() == 1 && factors[0].0 == p)
    }

    /// Every subgroup, canonically ordered, including the trivial group and
    /// the group itself. Subgroups are found by seeding with the cyclic
    /// subgroups and closing under joins with cyclic subgroups; every
    /// subgroup is such a join, and results are deduplicated by element set.
    pub fn all_subgroups(&self, caps: &Caps) -> Result<Vec<PermGroup>, GroupError> {
        if self.order() > caps.subgroups {
            return Err(GroupError::CapExceeded {
                what: "exhaustive subgroup enumeration",
                cap: caps.subgroups,
            });
        }
        let mut cyclics: BTreeMap<Vec<Permutation>, PermGroup> = BTreeMap::new();
        for el in &self.elements {
            if el.is_identity() {
                continue;
            }
            let mut powers = Vec::new();
            let mut p = el.clone();
            while !p.is_identity() {
                powers.push(p.clone());
                p = p.compose(el);
            }
            powers.push(Permutation::identity(self.degree));
            powers.sort();
            cyclics.entry(powers.clone()).or_insert(PermGroup {
                degree: self.degree,
                generators: vec![el.clone()],
                elements: powers,
            });
        }
        let cyclics: Vec<PermGroup> = cyclics.into_values().collect();

        let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        let trivial = Self::trivial(self.degree);
        found.insert(trivial.elements.clone());
        let mut out = vec![trivial];
        let mut worklist: Vec<PermGroup> = Vec::new();
        for c in &cyclics {
            if found.insert(c.elements.clone()) {
                out.push(c.clone());
                worklist.push(c.clone());
            }
        }
        while let Some(h) = worklist.pop() {
            for c in &cyclics {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.extend(c.generators.iter().cloned());
                let join = Self::generate_capped(self.degree, gens, self.order())
                    .expect("join of subgroups stays within the ambient group");
                if found.insert(join.elements.clone()) {
                    out.push(join.clone());
                    worklist.push(join);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Whether `self` is normal in `g`; conjugation is checked on the
    /// generators of both groups, which suffices.
    pub fn is_normal_in(&self, g: &PermGroup) -> Result<bool, GroupError> {
        if !self.is_subgroup_of(g) {
            return Err(GroupError::NotASubgroup);
        }
        for gg in &g.generators {
            let gg_inv = gg.inverse();
            for h in &self.generators {
                if !self.contains(&gg.compose(h).compose(&gg_inv)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `self` is a maximal subgroup of `g`: no `K` with
    /// `self < K < g` exists. Checked via joins — `self` is maximal iff
    /// adjoining any outside element already generates all of `g`.
    pub fn is_maximal_in(&self, g: &PermGroup) -> Result<bool, GroupError> {
        if !self.is_proper_subgroup_of(g) {
            return Err(GroupError::NotAProperSubgroup);
        }
        for el in &g.elements {
            if self.contains(el) {
                continue;
            }
            let mut gens = self.generators.clone();
            gens.push(el.clone());
            let join = Self::generate_capped(self.degree, gens, g.order())
                .expect("join inside g is bounded by |g|");
            if join.order() < g.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The normalizer of `self` in `g`: the largest subgroup of `g` in which
    /// `self` is normal.
    pub fn normalizer_in(&self, g: &PermGroup) -> Result<PermGroup, GroupError> {
        if !self.is_subgroup_of(g) {
            return Err(GroupError::NotASubgroup);
        }
        let elements: Vec<Permutation> = g
            .elements
            .iter()
            .filter(|&gg| {
                let gg_inv = gg.inverse();
                self.generators
                    .iter()
                    .all(|h| self.contains(&gg.compose(h).compose(&gg_inv)))
            })
            .cloned()
            .collect();
        Ok(Self::from_sorted_unchecked(self.degree, elements))
    }

    /// The normal core of `self` in `g`: the intersection of all conjugates.
    pub fn core_in(&self, g: &PermGroup) -> Result<PermGroup, GroupError> {
        if !self.is_subgroup_of(g) {
            return Err(GroupError::NotASubgroup);
        }
        let mut core = self.clone();
        for el in &g.elements {
            if core.is_trivial() {
                break;
            }
            core = core.intersection(&self.conjugated_by(el));
        }
        Ok(core)
    }

    /// A Sylow p-subgroup, grown from the trivial group by repeatedly
    /// adjoining an order-p coset of the normalizer quotient.
    pub fn sylow_subgroup(&self, p: u64) -> Result<PermGroup, GroupError> {
        self.sylow_from(Self::trivial(self.degree), p)
    }

    /// A Sylow p-subgroup containing the p-subgroup `h` (guaranteed to exist
    /// by Sylow theory).
    pub fn sylow_subgroup_containing(
        &self,
        h: &PermGroup,
        p: u64,
    ) -> Result<PermGroup, GroupError> {
        if !h.is_subgroup_of(self) {
            return Err(GroupError::NotASubgroup);
        }
        if !h.is_p_group(p) {
            return Err(GroupError::NotAPGroup);
        }
        self.sylow_from(h.clone(), p)
    }

    fn sylow_from(&self, start: PermGroup, p: u64) -> Result<PermGroup, GroupError> {
        if !is_prime_u64(p) {
            return Err(GroupError::NotPrime(p));
        }
        let mut target = 1usize;
        let mut n = self.order();
        while n % (p as usize) == 0 {
            n /= p as usize;
            target *= p as usize;
        }
        let mut current = start;
        while current.order() < target {
            let normalizer = current.normalizer_in(self)?;
            // p divides [N(P):P] for any p-subgroup P below a Sylow.
            let quotient = QuotientGroup::new(&normalizer, &current)?;
            let coset = quotient
                .coset_of_order(p)
                .expect("Cauchy's theorem yields an order-p coset in N(P)/P");
            let mut gens = current.generators.clone();
            gens.push(quotient.coset_rep(coset).clone());
            current = Self::generate_capped(self.degree, gens, self.order())
                .expect("p-subgroup growth stays within the group");
        }
        Ok(current)
    }

    /// Nilpotency, decided as "every Sylow subgroup is normal". The
    /// equivalent normalizer-growth characterization is exercised by the
    /// test suite.
    pub fn is_nilpotent(&self) -> Result<bool, GroupError> {
        for (p, _) in self.order_factors() {
            let sylow = self.sylow_subgroup(p)?;
            if !sylow.is_normal_in(self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// An element of exact order `p` (first in canonical order among the
    /// power-of-scan candidates).
    pub fn element_of_order(&self, p: u64) -> Result<Permutation, GroupError> {
        if !is_prime_u64(p) {
            return Err(GroupError::NotPrime(p));
        }
        if self.order() % (p as usize) != 0 {
            return Err(GroupError::PrimeDoesNotDivideOrder {
                p,
                order: self.order(),
            });
        }
        for el in &self.elements {
            let ord = el.order();
            if ord % (p as usize) == 0 {
                return Ok(el.pow(ord / p as usize));
            }
        }
        unreachable!("Cauchy's theorem guarantees an element of order p")
    }
}
