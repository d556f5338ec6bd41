//! Loop-free directed graphs on `0..n` and the orbital graphs of a group.
//!
//! Paths and connectivity are always taken in the undirected shadow: two
//! vertices are adjacent when an edge joins them in either direction.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::perm::{GeneratedGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("orbital graphs need two distinct points, got ({0}, {0})")]
    EqualPair(usize),
    #[error("group degree {degree} does not match {vertex_count} vertices")]
    DegreeMismatch { degree: usize, vertex_count: usize },
}

/// Undirected distance; disconnection is a normal outcome, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DiGraph {
    pub fn empty(vertex_count: usize) -> Self {
        DiGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = DiGraph::empty(vertex_count);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !g.edges.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    /// Each unordered pair becomes the two ordered edges.
    pub fn undirected<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        let g = DiGraph::new(vertex_count, pairs.iter().copied())?;
        Ok(g.undirected_shadow())
    }

    pub(crate) fn from_edge_set(vertex_count: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|&(u, v)| u != v && u < vertex_count && v < vertex_count));
        DiGraph {
            vertex_count,
            edges,
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((v, 0)..(v + 1, 0)).map(|&(_, w)| w)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, w)| w == v).count()
    }

    /// `true` when every edge is present in both directions.
    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|&(u, v)| self.has_edge(v, u))
    }

    pub fn undirected_shadow(&self) -> DiGraph {
        let mut edges = self.edges.clone();
        for &(u, v) in &self.edges {
            edges.insert((v, u));
        }
        DiGraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Sorted adjacency lists of the undirected shadow.
    pub fn undirected_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Components of the undirected shadow, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph with no vertices is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.connected_components().len() == 1
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Breadth-first distances from `source` in the undirected shadow.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let adj = self.undirected_adjacency();
        let mut dist = vec![Distance::Unreachable; self.vertex_count];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([(source, 0)]);
        while let Some((u, d)) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<DiGraph, GraphError> {
        let mut position = vec![None; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            position[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((position[u]?, position[v]?)))
            .collect();
        Ok(DiGraph::from_edge_set(vertices.len(), edges))
    }

    /// The graph with vertex `v` deleted; remaining vertices keep their order.
    pub fn without_vertex(&self, v: usize) -> Result<DiGraph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.vertex_count).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Image of the graph under a relabelling of its vertices.
    pub fn relabel(&self, p: &Permutation) -> Result<DiGraph, GraphError> {
        if p.degree() != self.vertex_count {
            return Err(GraphError::DegreeMismatch {
                degree: p.degree(),
                vertex_count: self.vertex_count,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (p.image(u), p.image(v)))
            .collect();
        Ok(DiGraph::from_edge_set(self.vertex_count, edges))
    }

    /// `true` when `p` maps the edge set onto itself.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.has_edge(p.image(u), p.image(v)))
    }
}

/// The graph on `0..vertex_count` whose edges are the orbit of `pair` under `group`.
///
/// The orbit is closed under the generators, which is exact for a finite
/// group, so no element enumeration is needed.
pub fn orbital_graph(
    group: &GeneratedGroup,
    pair: (usize, usize),
    vertex_count: usize,
) -> Result<DiGraph, GraphError> {
    if group.degree() != vertex_count {
        return Err(GraphError::DegreeMismatch {
            degree: group.degree(),
            vertex_count,
        });
    }
    let (u, v) = pair;
    let g = DiGraph::empty(vertex_count);
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::EqualPair(u));
    }
    let mut edges = BTreeSet::from([pair]);
    let mut queue = VecDeque::from([pair]);
    while let Some((a, b)) = queue.pop_front() {
        for gen in group.generators() {
            let e = (gen.image(a), gen.image(b));
            if edges.insert(e) {
                queue.push_back(e);
            }
        }
    }
    Ok(DiGraph::from_edge_set(vertex_count, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc3() -> DiGraph {
        DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(DiGraph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            DiGraph::new(2, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            DiGraph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn shadow() {
        let s = dc3().undirected_shadow();
        assert_eq!(s.edge_count(), 6);
        assert_eq!(s.undirected_shadow(), s);
        let single = DiGraph::new(3, [(0, 1)]).unwrap().undirected_shadow();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        assert!(single.is_symmetric());
        assert!(!dc3().is_symmetric());
    }

    #[test]
    fn connectivity_and_distance() {
        assert!(dc3().is_connected());
        assert_eq!(dc3().distance(0, 2), Ok(Distance::Finite(1)));
        let g = DiGraph::new(4, [(0, 1)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(g.distance(0, 3), Ok(Distance::Unreachable));
        let c4 = DiGraph::undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.distance(0, 2), Ok(Distance::Finite(2)));
        assert_eq!(c4.distance(1, 1), Ok(Distance::Finite(0)));
        assert!(!DiGraph::empty(0).is_connected());
    }

    #[test]
    fn orbital_graphs() {
        let s3 = GeneratedGroup::new(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        let og = orbital_graph(&s3, (0, 1), 3).unwrap();
        assert_eq!(og.edge_count(), 6);
        assert!(og.is_connected());

        let d4 = GeneratedGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let og = orbital_graph(&d4, (0, 2), 4).unwrap();
        assert_eq!(
            og.edges().collect::<Vec<_>>(),
            vec![(0, 2), (1, 3), (2, 0), (3, 1)]
        );
        assert_eq!(og.connected_components(), vec![vec![0, 2], vec![1, 3]]);

        let triv = GeneratedGroup::trivial(3).unwrap();
        let og = orbital_graph(&triv, (0, 1), 3).unwrap();
        assert_eq!(og.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(!og.is_connected());
        assert_eq!(
            orbital_graph(&triv, (1, 1), 3),
            Err(GraphError::EqualPair(1))
        );
    }
}
