//! Permutations of `{0, .., n-1}` and groups given by generators.
//!
//! Permutations act on the right: `p.compose(&q)` applies `p` first, then `q`,
//! so `(p * q)(i) = q(p(i))`. All subgroup operations below are exact and
//! enumeration based, which is fine at the degrees this crate works with.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default ceiling on the number of elements a group may have before
/// enumeration gives up.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image sequence is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("permutations need at least one point")]
    EmptyDomain,
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
}

/// A permutation stored as its full image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::EmptyDomain);
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::EmptyDomain);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> Result<usize, PermError> {
        self.images
            .get(point)
            .copied()
            .ok_or(PermError::PointOutOfRange {
                point,
                degree: self.degree(),
            })
    }

    /// Unchecked image lookup; panics when `point >= degree`.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Same as [`Permutation::compose`] for permutations already known to share a degree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images.get(point) == Some(&point)
    }

    /// Nontrivial cycles in ascending order of their least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
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
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A permutation group described by a finite generating sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratedGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::EmptyDomain);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(GeneratedGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Result<Self, PermError> {
        GeneratedGroup::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn check_point(&self, point: usize) -> Result<(), PermError> {
        if point >= self.degree {
            Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    /// The orbit `point^G`, closed under the generators.
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>, PermError> {
        self.check_point(point)?;
        let mut seen = BTreeSet::from([point]);
        let mut queue = VecDeque::from([point]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.image(p);
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        Ok(seen)
    }

    /// All orbits, ordered by least point.
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut covered = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if covered[p] {
                continue;
            }
            let orb = self.orbit(p).expect("point in range");
            for &q in &orb {
                covered[q] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Every element, sorted lexicographically by image sequence.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Permutation>, PermError> {
        closure(self.degree, &self.generators, cap)
    }

    pub fn order(&self, cap: usize) -> Result<usize, PermError> {
        Ok(self.enumerate_elements(cap)?.len())
    }

    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerate_elements(cap)?.binary_search(p).is_ok())
    }

    pub fn point_stabilizer(&self, point: usize, cap: usize) -> Result<GeneratedGroup, PermError> {
        self.check_point(point)?;
        let elements: Vec<Permutation> = self
            .enumerate_elements(cap)?
            .into_iter()
            .filter(|g| g.fixes(point))
            .collect();
        Ok(GeneratedGroup {
            degree: self.degree,
            generators: generating_subset(self.degree, &elements),
        })
    }

    pub fn setwise_stabilizer(
        &self,
        set: &BTreeSet<usize>,
        cap: usize,
    ) -> Result<GeneratedGroup, PermError> {
        for &p in set {
            self.check_point(p)?;
        }
        let elements: Vec<Permutation> = self
            .enumerate_elements(cap)?
            .into_iter()
            .filter(|g| set.iter().all(|&p| set.contains(&g.image(p))))
            .collect();
        Ok(GeneratedGroup {
            degree: self.degree,
            generators: generating_subset(self.degree, &elements),
        })
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0)
            .map(|o| o.len() == self.degree)
            .unwrap_or(false)
    }

    /// Transitive with trivial point stabilizers, i.e. `|G| = degree`.
    ///
    /// A transitive group has at least `degree` elements, so enumeration is
    /// capped at `degree`: one element more already refutes regularity.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order(self.degree).is_ok()
    }
}

/// Closure of `generators` under composition, sorted, failing past `cap` elements.
pub(crate) fn closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, PermError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = e.then(g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(PermError::GroupTooLarge(cap));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Greedy generating subset of a finite subgroup given by its elements:
/// walk the elements in order and keep those not yet generated.
pub(crate) fn generating_subset(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut generated: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for e in elements {
        if generated.contains(e) {
            continue;
        }
        gens.push(e.clone());
        // a subgroup of a finite group: the closure stays inside `elements`
        generated = closure(degree, &gens, usize::MAX)
            .expect("uncapped closure")
            .into_iter()
            .collect();
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s3() -> GeneratedGroup {
        GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn compose_three_cycle_with_itself() {
        let c = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(c.compose(&c).unwrap(), cyc(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn inverse_of_identity() {
        let id = Permutation::identity(3);
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn apply_cycle() {
        assert_eq!(cyc(3, &[&[0, 1, 2]]).apply(2), Ok(0));
    }

    #[test]
    fn right_action_convention() {
        let p = cyc(3, &[&[0, 1]]);
        let q = cyc(3, &[&[1, 2]]);
        let pq = p.compose(&q).unwrap();
        for i in 0..3 {
            assert_eq!(pq.image(i), q.image(p.image(i)));
        }
    }

    #[test]
    fn errors() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
        assert_eq!(
            a.apply(3),
            Err(PermError::PointOutOfRange {
                point: 3,
                degree: 3
            })
        );
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::NotABijection(3))
        );
    }

    #[test]
    fn orbits() {
        let z3 = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(z3.orbit(0).unwrap(), BTreeSet::from([0, 1, 2]));
        let triv = GeneratedGroup::trivial(4).unwrap();
        assert_eq!(triv.orbit(2).unwrap(), BTreeSet::from([2]));
        let g = GeneratedGroup::new(4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]).unwrap();
        assert_eq!(g.orbit(0).unwrap(), BTreeSet::from([0, 1]));
        assert!(g.orbit(4).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(s3().enumerate_elements(100).unwrap().len(), 6);
        let triv = GeneratedGroup::trivial(3).unwrap();
        assert_eq!(
            triv.enumerate_elements(1).unwrap(),
            vec![Permutation::identity(3)]
        );
        let z3 = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(z3.enumerate_elements(2), Err(PermError::GroupTooLarge(2)));
        let els = s3().enumerate_elements(100).unwrap();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn stabilizers() {
        let st = s3().point_stabilizer(0, 100).unwrap();
        assert_eq!(
            st.enumerate_elements(100).unwrap(),
            vec![Permutation::identity(3), cyc(3, &[&[1, 2]])]
        );
        let all = BTreeSet::from([0, 1, 2]);
        assert_eq!(
            s3().setwise_stabilizer(&all, 100)
                .unwrap()
                .enumerate_elements(100)
                .unwrap(),
            s3().enumerate_elements(100).unwrap()
        );
        let z3 = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(z3.point_stabilizer(0, 100).unwrap().order(100).unwrap(), 1);
    }

    #[test]
    fn transitivity_and_regularity() {
        let z3 = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert!(z3.is_transitive());
        assert!(z3.is_regular());
        assert!(s3().is_transitive());
        assert!(!s3().is_regular());
        let g = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1]])]).unwrap();
        assert!(!g.is_transitive());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(4, &[&[0, 2], &[1, 3]]).to_string(), "(0 2)(1 3)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }
}
