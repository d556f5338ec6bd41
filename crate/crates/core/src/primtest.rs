//! Primitivity tests for finite permutation groups.
//!
//! Three independent routes are provided and must agree on transitive groups:
//! connectivity of orbital graphs, saturation of congruences from a seed pair,
//! and maximality of a point stabilizer.

use std::collections::HashSet;

use thiserror::Error;

use crate::autgrp::{self, AutError};
use crate::decomp::{self, DecompError};
use crate::digraph::{self, DiGraph, GraphError};
use crate::perm::{closure, generating_subset, GeneratedGroup, PermError, Permutation};

/// Cap on `|G|` for the exhaustive maximal-subgroup test.
pub const DEFAULT_MAXIMALITY_CAP: usize = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimError {
    #[error("group is not transitive")]
    NotTransitive,
    #[error("primitivity needs at least two points")]
    TrivialDomain,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

/// An equivalence relation on `0..degree`, classes numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Partition {
    /// Renumbers arbitrary class labels into `0..k` by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = remap.len();
                *remap.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            class_count: remap.len(),
            class_of,
        }
    }

    pub fn from_classes(degree: usize, classes: &[Vec<usize>]) -> Self {
        let mut labels = vec![usize::MAX; degree];
        for (i, c) in classes.iter().enumerate() {
            for &p in c {
                labels[p] = i;
            }
        }
        // points missing from `classes` become singletons
        let mut fresh = classes.len();
        for l in labels.iter_mut() {
            if *l == usize::MAX {
                *l = fresh;
                fresh += 1;
            }
        }
        Partition::from_labels(&labels)
    }

    pub fn trivial(degree: usize) -> Self {
        Partition::from_labels(&(0..degree).collect::<Vec<_>>())
    }

    pub fn universal(degree: usize) -> Self {
        Partition::from_labels(&vec![0; degree])
    }

    pub fn degree(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, p: usize) -> usize {
        self.class_of[p]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Classes in id order, each sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (p, &c) in self.class_of.iter().enumerate() {
            out[c].push(p);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.class_count == self.degree()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count <= 1
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|p| {
                let rep = self.classes()[self.class_of[p]][0];
                other.same_class(p, rep)
            })
    }

    /// `true` when `p` maps every class onto a class.
    pub fn is_invariant_under(&self, p: &Permutation) -> bool {
        self.classes().iter().all(|c| {
            let target = self.class_of[p.image(c[0])];
            c.iter().all(|&x| self.class_of[p.image(x)] == target)
        })
    }
}

/// Union-find with path halving; roots are the smallest member.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn partition(&mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigmanOutcome {
    pub primitive: bool,
    /// First pair `(0, b)` whose orbital graph is disconnected.
    pub witness: Option<(usize, usize)>,
}

fn require_transitive(g: &GeneratedGroup) -> Result<(), PrimError> {
    if g.degree() < 2 {
        return Err(PrimError::TrivialDomain);
    }
    if !g.is_transitive() {
        return Err(PrimError::NotTransitive);
    }
    Ok(())
}

/// Orbital-graph test. With a transitive group, base point 0 suffices.
pub fn is_primitive_higman(g: &GeneratedGroup) -> Result<HigmanOutcome, PrimError> {
    require_transitive(g)?;
    for b in 1..g.degree() {
        let og = digraph::orbital_graph(g, (0, b), g.degree())?;
        if !og.is_connected() {
            return Ok(HigmanOutcome {
                primitive: false,
                witness: Some((0, b)),
            });
        }
    }
    Ok(HigmanOutcome {
        primitive: true,
        witness: None,
    })
}

/// The finest `G`-congruence relating every seed pair.
pub fn congruence_closure_of(
    g: &GeneratedGroup,
    seeds: &[(usize, usize)],
) -> Result<Partition, PrimError> {
    let n = g.degree();
    let mut sets = DisjointSets::new(n);
    let mut pending = Vec::new();
    for &(a, b) in seeds {
        for p in [a, b] {
            if p >= n {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: n,
                }
                .into());
            }
        }
        if sets.union(a, b) {
            pending.push((a, b));
        }
    }
    // every merge is recorded as a pair; images of recorded pairs under the
    // generators are merged in turn until nothing new appears
    while let Some((a, b)) = pending.pop() {
        for gen in g.generators() {
            let (x, y) = (gen.image(a), gen.image(b));
            if sets.union(x, y) {
                pending.push((x, y));
            }
        }
    }
    Ok(sets.partition())
}

pub fn congruence_closure(
    g: &GeneratedGroup,
    seed: (usize, usize),
) -> Result<Partition, PrimError> {
    congruence_closure_of(g, &[seed])
}

pub fn is_primitive_congruence(g: &GeneratedGroup) -> Result<bool, PrimError> {
    require_transitive(g)?;
    for b in 1..g.degree() {
        if !congruence_closure(g, (0, b))?.is_universal() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `G_point` is a maximal subgroup: `<G_point, x> = G` for every `x`
/// outside the stabilizer. Exhaustive, limited to
/// [`DEFAULT_MAXIMALITY_CAP`] elements.
pub fn is_maximal_stabilizer(g: &GeneratedGroup, point: usize) -> Result<bool, PrimError> {
    is_maximal_stabilizer_capped(g, point, DEFAULT_MAXIMALITY_CAP)
}

pub fn is_maximal_stabilizer_capped(
    g: &GeneratedGroup,
    point: usize,
    cap: usize,
) -> Result<bool, PrimError> {
    let elements = g.enumerate_elements(cap)?;
    if point >= g.degree() {
        return Err(PermError::PointOutOfRange {
            point,
            degree: g.degree(),
        }
        .into());
    }
    let stabilizer: Vec<Permutation> = elements
        .iter()
        .filter(|e| e.fixes(point))
        .cloned()
        .collect();
    if stabilizer.len() == elements.len() {
        // not a proper subgroup
        return Ok(false);
    }
    let stab_gens = generating_subset(g.degree(), &stabilizer);
    let stab_set: HashSet<&Permutation> = stabilizer.iter().collect();
    let mut covered: HashSet<Permutation> = HashSet::new();
    for x in &elements {
        if stab_set.contains(x) || covered.contains(x) {
            continue;
        }
        let mut gens = stab_gens.clone();
        gens.push(x.clone());
        let sub = closure(g.degree(), &gens, cap)?;
        if sub.len() != elements.len() {
            return Ok(false);
        }
        // every element of the coset x·G_point generates the same subgroup
        for h in &stabilizer {
            covered.insert(x.then(h));
        }
    }
    Ok(true)
}

/// Summary of a candidate block's automorphism group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub aut_order: u64,
    /// At least three vertices.
    pub size_ok: bool,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    /// `Aut g` primitive on the vertices; `false` whenever it is intransitive.
    pub primitive: bool,
    /// `Aut g` regular on the vertices.
    pub regular: bool,
}

pub fn classify_block(g: &DiGraph) -> Result<BlockReport, PrimError> {
    if !g.is_connected() {
        return Err(DecompError::NotConnected.into());
    }
    let group = autgrp::automorphism_group(g)?;
    let aut_order = autgrp::automorphism_group_order(g)?;
    let n = g.vertex_count();
    let vertex_transitive = group.is_transitive();
    let primitive = vertex_transitive && n >= 2 && is_primitive_higman(&group)?.primitive;
    let regular = vertex_transitive && aut_order == n as u64;
    Ok(BlockReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        aut_order,
        size_ok: n >= 3,
        vertex_transitive,
        edge_transitive: autgrp::is_edge_transitive(g)?,
        primitive,
        regular,
    })
}

/// `true` when `g` is connected and has no cut vertex.
pub fn is_block(g: &DiGraph) -> bool {
    decomp::cut_vertices(g).is_ok_and(|c| c.is_empty())
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

    fn z3() -> GeneratedGroup {
        GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap()
    }

    fn d4() -> GeneratedGroup {
        GeneratedGroup::new(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])]).unwrap()
    }

    fn f21() -> GeneratedGroup {
        let shift = Permutation::from_images((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
        let double = Permutation::from_images((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
        GeneratedGroup::new(7, vec![shift, double]).unwrap()
    }

    #[test]
    fn higman() {
        assert_eq!(
            is_primitive_higman(&s3()).unwrap(),
            HigmanOutcome {
                primitive: true,
                witness: None
            }
        );
        assert_eq!(
            is_primitive_higman(&d4()).unwrap(),
            HigmanOutcome {
                primitive: false,
                witness: Some((0, 2))
            }
        );
        assert!(is_primitive_higman(&z3()).unwrap().primitive);
        let intransitive = GeneratedGroup::new(3, vec![cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(
            is_primitive_higman(&intransitive),
            Err(PrimError::NotTransitive)
        );
    }

    #[test]
    fn closure_examples() {
        assert!(congruence_closure(&d4(), (1, 1)).unwrap().is_trivial());
        assert_eq!(
            congruence_closure(&d4(), (0, 2)).unwrap().classes(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert!(congruence_closure(&s3(), (0, 1)).unwrap().is_universal());
    }

    #[test]
    fn congruence_route() {
        assert!(is_primitive_congruence(&s3()).unwrap());
        assert!(!is_primitive_congruence(&d4()).unwrap());
        assert!(is_primitive_congruence(&f21()).unwrap());
    }

    #[test]
    fn maximality_route() {
        assert!(is_maximal_stabilizer(&s3(), 0).unwrap());
        assert!(!is_maximal_stabilizer(&d4(), 0).unwrap());
        assert!(is_maximal_stabilizer(&z3(), 0).unwrap());
        assert!(is_maximal_stabilizer(&f21(), 3).unwrap());
    }

    #[test]
    fn block_reports() {
        let dc3 = DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = classify_block(&dc3).unwrap();
        assert!(r.size_ok && r.vertex_transitive && r.primitive && r.regular);
        let k3 = dc3.undirected_shadow();
        let r = classify_block(&k3).unwrap();
        assert!(r.size_ok && r.vertex_transitive && r.primitive && !r.regular);
        let c4 = DiGraph::undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = classify_block(&c4).unwrap();
        assert!(r.size_ok && r.vertex_transitive && !r.primitive && !r.regular);
        let edge = DiGraph::new(2, [(0, 1)]).unwrap();
        let r = classify_block(&edge).unwrap();
        assert!(!r.size_ok && !r.vertex_transitive && !r.primitive);
    }

    #[test]
    fn partition_helpers() {
        let p = Partition::from_labels(&[5, 5, 2, 2, 9]);
        assert_eq!(p.classes(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(Partition::trivial(5).refines(&p));
        assert!(p.refines(&Partition::universal(5)));
        assert!(!Partition::universal(5).refines(&p));
    }
}
