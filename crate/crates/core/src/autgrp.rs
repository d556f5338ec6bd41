//! Automorphisms and aligned isomorphisms of small digraphs.
//!
//! Backtracking assigns images to vertices `0, 1, ..` in order, trying
//! candidates in ascending order. The first complete assignment found is
//! therefore the lexicographically least one. Candidates are pruned by
//! (in-degree, out-degree) and by consistency with every earlier assignment
//! in both edge directions.
//!
//! The automorphism group is returned through a stabilizer-chain transversal:
//! for each level `i` and each reachable image `j`, one automorphism fixing
//! `0..i` pointwise and sending `i` to `j`. These generate the group, and the
//! product of the level sizes is its order.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::digraph::DiGraph;
use crate::perm::{GeneratedGroup, Permutation};

/// Largest vertex count the backtracking search accepts.
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("graph has {0} vertices, above the limit of {DEFAULT_VERTEX_LIMIT}")]
    GraphTooLarge(usize),
    #[error("graphs with no vertices have no automorphism group")]
    EmptyGraph,
    #[error("anchor vertex {0} out of range")]
    AnchorOutOfRange(usize),
}

struct Matcher<'a> {
    from: &'a DiGraph,
    to: &'a DiGraph,
    n: usize,
    from_adj: Vec<bool>,
    to_adj: Vec<bool>,
    from_sig: Vec<(usize, usize)>,
    to_sig: Vec<(usize, usize)>,
}

impl<'a> Matcher<'a> {
    fn new(from: &'a DiGraph, to: &'a DiGraph) -> Self {
        let n = from.vertex_count();
        let matrix = |g: &DiGraph| {
            let mut m = vec![false; n * n];
            for (u, v) in g.edges() {
                m[u * n + v] = true;
            }
            m
        };
        let sig = |g: &DiGraph| {
            (0..n)
                .map(|v| (g.in_degree(v), g.out_degree(v)))
                .collect::<Vec<_>>()
        };
        Matcher {
            from,
            to,
            n,
            from_adj: matrix(from),
            to_adj: matrix(to),
            from_sig: sig(from),
            to_sig: sig(to),
        }
    }

    fn compatible(&self, images: &[usize], v: usize, w: usize) -> bool {
        if self.from_sig[v] != self.to_sig[w] {
            return false;
        }
        let n = self.n;
        if self.from_adj[v * n + v] != self.to_adj[w * n + w] {
            return false;
        }
        images.iter().enumerate().all(|(u, &x)| {
            self.from_adj[u * n + v] == self.to_adj[x * n + w]
                && self.from_adj[v * n + u] == self.to_adj[w * n + x]
        })
    }

    /// Depth-first search; `forced[v]` pins the image of `v`. The visitor
    /// returns `false` to stop the search.
    fn search(&self, forced: &[Option<usize>], visit: &mut dyn FnMut(&[usize]) -> bool) {
        if self.from.vertex_count() != self.to.vertex_count()
            || self.from.edge_count() != self.to.edge_count()
        {
            return;
        }
        let mut images: Vec<usize> = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(forced, &mut images, &mut used, visit);
    }

    fn extend(
        &self,
        forced: &[Option<usize>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let v = images.len();
        if v == self.n {
            return visit(images);
        }
        let candidates: Vec<usize> = match forced[v] {
            Some(w) => vec![w],
            None => (0..self.n).collect(),
        };
        for w in candidates {
            if used[w] || !self.compatible(images, v, w) {
                continue;
            }
            used[w] = true;
            images.push(w);
            let keep_going = self.extend(forced, images, used, visit);
            images.pop();
            used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn first(&self, forced: &[Option<usize>]) -> Option<Permutation> {
        let mut found = None;
        self.search(forced, &mut |imgs| {
            found = Some(imgs.to_vec());
            false
        });
        found.map(|imgs| Permutation::from_images(imgs).expect("search yields bijections"))
    }
}

fn check_size(g: &DiGraph) -> Result<(), AutError> {
    match g.vertex_count() {
        0 => Err(AutError::EmptyGraph),
        n if n > DEFAULT_VERTEX_LIMIT => Err(AutError::GraphTooLarge(n)),
        _ => Ok(()),
    }
}

/// Transversal generators and per-level orbit sizes.
fn transversal(g: &DiGraph) -> (Vec<Permutation>, Vec<usize>) {
    let n = g.vertex_count();
    let m = Matcher::new(g, g);
    let mut gens = BTreeSet::new();
    let mut sizes = Vec::with_capacity(n);
    for i in 0..n {
        let mut forced: Vec<Option<usize>> = (0..i).map(Some).collect();
        forced.resize(n, None);
        let mut size = 1;
        for j in i + 1..n {
            forced[i] = Some(j);
            if let Some(p) = m.first(&forced) {
                size += 1;
                gens.insert(p);
            }
        }
        sizes.push(size);
    }
    (gens.into_iter().collect(), sizes)
}

/// The full automorphism group, as a generating set from a stabilizer-chain
/// transversal. Membership requires `e in E <=> e^p in E` on ordered edges.
pub fn automorphism_group(g: &DiGraph) -> Result<GeneratedGroup, AutError> {
    check_size(g)?;
    let (gens, _) = transversal(g);
    Ok(GeneratedGroup::new(g.vertex_count(), gens).expect("degrees agree"))
}

/// `|Aut g|` as the product of the transversal sizes; no enumeration needed.
pub fn automorphism_group_order(g: &DiGraph) -> Result<u64, AutError> {
    check_size(g)?;
    let (_, sizes) = transversal(g);
    Ok(sizes.iter().map(|&s| s as u64).product())
}

/// Every automorphism, in ascending lexicographic order.
pub fn automorphisms(g: &DiGraph) -> Result<Vec<Permutation>, AutError> {
    check_size(g)?;
    let m = Matcher::new(g, g);
    let mut out = Vec::new();
    m.search(&vec![None; g.vertex_count()], &mut |imgs| {
        out.push(Permutation::from_images(imgs.to_vec()).expect("bijection"));
        true
    });
    Ok(out)
}

pub fn is_vertex_transitive(g: &DiGraph) -> Result<bool, AutError> {
    Ok(automorphism_group(g)?.is_transitive())
}

/// Transitivity of `Aut g` on ordered edges. Edgeless graphs count as edge-transitive.
pub fn is_edge_transitive(g: &DiGraph) -> Result<bool, AutError> {
    let group = automorphism_group(g)?;
    let Some(first) = g.edges().next() else {
        return Ok(true);
    };
    let mut seen = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some((u, v)) = queue.pop_front() {
        for p in group.generators() {
            let e = (p.image(u), p.image(v));
            if seen.insert(e) {
                queue.push_back(e);
            }
        }
    }
    Ok(seen.len() == g.edge_count())
}

/// The lexicographically least isomorphism `g1 -> g2` sending `a1` to `a2`.
pub fn aligned_isomorphism(
    g1: &DiGraph,
    a1: usize,
    g2: &DiGraph,
    a2: usize,
) -> Result<Option<Permutation>, AutError> {
    check_size(g1)?;
    check_size(g2)?;
    if a1 >= g1.vertex_count() {
        return Err(AutError::AnchorOutOfRange(a1));
    }
    if a2 >= g2.vertex_count() {
        return Err(AutError::AnchorOutOfRange(a2));
    }
    if g1.vertex_count() != g2.vertex_count() {
        return Ok(None);
    }
    let mut forced = vec![None; g1.vertex_count()];
    forced[a1] = Some(a2);
    Ok(Matcher::new(g1, g2).first(&forced))
}

/// The lexicographically least isomorphism `g1 -> g2`, if any.
pub fn find_isomorphism(g1: &DiGraph, g2: &DiGraph) -> Result<Option<Permutation>, AutError> {
    check_size(g1)?;
    check_size(g2)?;
    if g1.vertex_count() != g2.vertex_count() {
        return Ok(None);
    }
    Ok(Matcher::new(g1, g2).first(&vec![None; g1.vertex_count()]))
}
