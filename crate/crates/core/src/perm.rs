//! Permutations of `{1..n}` in image-vector form with cycle-notation display.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::GroupError;

/// A permutation of the points `{1..n}`, stored as the image vector of the
/// 0-based points. Comparison is lexicographic on images, which makes the
/// sorted element list of a group a canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(GroupError::InvalidPermutation(String::from(
                    "image vector is not a bijection",
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1..degree}` as the composition of the given
    /// cycles (1-based points), applied right to left. Disjoint cycles are
    /// the common case; overlapping cycles are composed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut in_cycle = vec![false; degree];
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(GroupError::InvalidPermutation(alloc::format!(
                        "point {pt} outside 1..{degree}"
                    )));
                }
                if in_cycle[pt - 1] {
                    return Err(GroupError::InvalidPermutation(alloc::format!(
                        "point {pt} repeated within a cycle"
                    )));
                }
                in_cycle[pt - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to;
            }
            let step = Permutation { images };
            perm = perm.compose(&step);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    pub fn pow(&self, mut e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint-cycle decomposition with 1-based points; fixed points are
    /// omitted and each cycle starts at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn identity_fixes_everything() {
        let e = Permutation::identity(4);
        assert!(e.is_identity());
        assert_eq!(e.order(), 1);
        assert_eq!(alloc::format!("{e}"), "()");
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_images(vec![1, 0, 2]).is_ok());
    }

    #[test]
    fn cycle_roundtrip() {
        let p = cyc(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(alloc::format!("{p}"), "(1 2)(3 4)");
        assert_eq!(p.order(), 2);
        let q = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(q.order(), 3);
        assert_eq!(q.apply(0), 1);
        assert_eq!(q.apply(2), 0);
    }

    #[test]
    fn composition_applies_right_first() {
        // (1 2) then (2 3): x=1 -> 2 -> 3 under (2 3)∘(1 2).
        let a = cyc(3, &[&[2, 3]]);
        let b = cyc(3, &[&[1, 2]]);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 2);
        // Same as parsing "(2 3)(1 2)" right to left.
        let parsed = cyc(3, &[&[2, 3], &[1, 2]]);
        assert_eq!(ab, parsed);
    }

    #[test]
    fn inverse_and_pow() {
        let p = cyc(5, &[&[1, 2, 3, 4, 5]]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.pow(5), Permutation::identity(5));
        assert_eq!(p.pow(2), p.compose(&p));
    }

    #[test]
    fn repeated_point_in_cycle_rejected() {
        assert!(Permutation::from_cycles(3, &[vec![1, 1]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
    }
}
