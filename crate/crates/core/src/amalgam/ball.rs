use std::collections::HashMap;

use crate::decomp::{self, BlockCutTree, DecompError, TreeNode};
use crate::digraph::DiGraph;

use super::{Amalgam, AmalgamError, BlockAddress, VertexAddress, BALL_VERTEX_CAP};

/// A block of the ball with its labeling: `vertices[l]` carries label `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisteredBlock {
    pub address: BlockAddress,
    pub vertices: Vec<usize>,
}

impl RegisteredBlock {
    /// The vertex the block hangs from (label 0).
    pub fn attaching_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }
}

/// The ball `Γ_k`: every vertex of generation at most `k`.
///
/// Vertices are numbered breadth-first, so the root block holds `0..n` with
/// index equal to label, interior vertices (generation below `k`) form a
/// prefix, and the ball of radius `k` is an index prefix of radius `k + 1`.
#[derive(Debug, Clone)]
pub struct AmalgamBall {
    amalgam: Amalgam,
    radius: usize,
    graph: DiGraph,
    addresses: Vec<VertexAddress>,
    index: HashMap<VertexAddress, usize>,
    blocks: Vec<RegisteredBlock>,
    block_index: HashMap<BlockAddress, usize>,
    vertex_blocks: Vec<Vec<usize>>,
    interior_count: usize,
}

/// `n + n(m-1)(n-1) * sum_{j<k} ((m-1)(n-1))^j`, or `None` on overflow.
pub fn ball_vertex_count(n: usize, m: usize, k: usize) -> Option<u128> {
    let (n, m) = (n as u128, m as u128);
    let r = (m.checked_sub(1)?).checked_mul(n.checked_sub(1)?)?;
    let mut sum: u128 = 0;
    let mut term: u128 = 1;
    for _ in 0..k {
        sum = sum.checked_add(term)?;
        term = term.checked_mul(r)?;
    }
    n.checked_add(n.checked_mul(r)?.checked_mul(sum)?)
}

pub fn build_ball(block: &DiGraph, m: usize, radius: usize) -> Result<AmalgamBall, AmalgamError> {
    let amalgam = Amalgam::new(block.clone(), m)?;
    AmalgamBall::new(amalgam, radius)
}

/// The block-cut-vertex tree of the ball graph.
pub fn ball_block_cut_tree(ball: &AmalgamBall) -> Result<BlockCutTree, DecompError> {
    decomp::block_cut_tree(ball.graph())
}

impl AmalgamBall {
    pub fn new(amalgam: Amalgam, radius: usize) -> Result<Self, AmalgamError> {
        let n = amalgam.block_order();
        let m = amalgam.multiplicity();
        let expected = ball_vertex_count(n, m, radius).unwrap_or(u128::MAX);
        if expected > BALL_VERTEX_CAP as u128 {
            return Err(AmalgamError::BallTooLarge {
                vertices: expected,
                cap: BALL_VERTEX_CAP,
            });
        }
        let mut addresses: Vec<VertexAddress> = (0..n).map(VertexAddress::root).collect();
        let mut blocks = vec![RegisteredBlock {
            address: BlockAddress::Root,
            vertices: (0..n).collect(),
        }];
        let mut vertex_blocks: Vec<Vec<usize>> = vec![vec![0]; n];
        let mut layer_start = 0;
        for _ in 0..radius {
            let layer_end = addresses.len();
            for u in layer_start..layer_end {
                for slot in 0..m - 1 {
                    let id = blocks.len();
                    let mut vertices = vec![u];
                    for label in 1..n {
                        vertices.push(addresses.len());
                        addresses.push(addresses[u].child(slot, label));
                        vertex_blocks.push(vec![id]);
                    }
                    vertex_blocks[u].push(id);
                    blocks.push(RegisteredBlock {
                        address: BlockAddress::Child {
                            parent: addresses[u].clone(),
                            slot,
                        },
                        vertices,
                    });
                }
            }
            layer_start = layer_end;
        }
        let mut edges = Vec::with_capacity(blocks.len() * amalgam.block().edge_count());
        for b in &blocks {
            for (x, y) in amalgam.block().edges() {
                edges.push((b.vertices[x], b.vertices[y]));
            }
        }
        let graph = DiGraph::new(addresses.len(), edges).expect("blocks share at most one vertex");
        let index = addresses
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let block_index = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.address.clone(), i))
            .collect();
        Ok(AmalgamBall {
            interior_count: layer_start,
            amalgam,
            radius,
            graph,
            addresses,
            index,
            blocks,
            block_index,
            vertex_blocks,
        })
    }

    pub fn amalgam(&self) -> &Amalgam {
        &self.amalgam
    }

    pub fn block_graph(&self) -> &DiGraph {
        self.amalgam.block()
    }

    pub fn multiplicity(&self) -> usize {
        self.amalgam.multiplicity()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn graph(&self) -> &DiGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.addresses.len()
    }

    pub fn address(&self, v: usize) -> &VertexAddress {
        &self.addresses[v]
    }

    pub fn vertex_of(&self, address: &VertexAddress) -> Option<usize> {
        self.index.get(address).copied()
    }

    pub fn blocks(&self) -> &[RegisteredBlock] {
        &self.blocks
    }

    pub fn block(&self, id: usize) -> &RegisteredBlock {
        &self.blocks[id]
    }

    pub fn block_of(&self, address: &BlockAddress) -> Option<usize> {
        self.block_index.get(address).copied()
    }

    /// Registry id of the root block.
    pub fn root_block(&self) -> usize {
        0
    }

    /// Registry ids of the blocks at `v` present in the ball, in canonical order.
    pub fn blocks_at(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn label_in(&self, v: usize, block: usize) -> Option<usize> {
        self.blocks[block].vertices.iter().position(|&x| x == v)
    }

    pub fn generation(&self, v: usize) -> usize {
        self.addresses[v].generation()
    }

    /// Interior vertices are those with all `m` blocks present.
    pub fn is_interior(&self, v: usize) -> bool {
        v < self.interior_count
    }

    pub fn interior_count(&self) -> usize {
        self.interior_count
    }

    pub fn interior(&self) -> std::ops::Range<usize> {
        0..self.interior_count
    }

    pub fn is_interior_block(&self, id: usize) -> bool {
        self.blocks[id]
            .vertices
            .iter()
            .all(|&v| self.is_interior(v))
    }

    /// Node of `tree` for a registered block; `tree` must come from this ball.
    pub fn tree_node_of_block(&self, tree: &BlockCutTree, id: usize) -> TreeNode {
        TreeNode::Block(
            tree.block_id(&self.blocks[id].sorted_vertices())
                .expect("registered blocks are the blocks of the ball"),
        )
    }

    /// Registry id of a block of `tree`.
    pub fn block_of_tree_node(&self, tree: &BlockCutTree, node: TreeNode) -> Option<usize> {
        let TreeNode::Block(b) = node else {
            return None;
        };
        let vertices = tree.blocks().get(b)?;
        // the two lowest vertices of a block determine it
        let (&a, &c) = (vertices.first()?, vertices.get(1)?);
        self.vertex_blocks[a]
            .iter()
            .copied()
            .find(|&id| self.blocks[id].vertices.contains(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc3() -> DiGraph {
        DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn small_balls() {
        let b1 = build_ball(&dc3(), 2, 1).unwrap();
        assert_eq!((b1.vertex_count(), b1.blocks().len()), (9, 4));
        let b2 = build_ball(&dc3(), 2, 2).unwrap();
        assert_eq!((b2.vertex_count(), b2.blocks().len()), (21, 10));
        let b0 = build_ball(&dc3(), 2, 0).unwrap();
        assert_eq!((b0.vertex_count(), b0.blocks().len()), (3, 1));
        assert_eq!(b0.interior_count(), 0);
        assert_eq!(b0.graph(), &dc3());
    }

    #[test]
    fn prefix_property() {
        let b2 = build_ball(&dc3(), 3, 2).unwrap();
        let b3 = build_ball(&dc3(), 3, 3).unwrap();
        for v in 0..b2.vertex_count() {
            assert_eq!(b2.address(v), b3.address(v));
        }
        assert_eq!(b3.interior_count(), b2.vertex_count());
    }

    #[test]
    fn closed_form() {
        assert_eq!(ball_vertex_count(3, 2, 1), Some(9));
        assert_eq!(ball_vertex_count(3, 2, 2), Some(21));
        assert_eq!(ball_vertex_count(7, 3, 0), Some(7));
    }

    #[test]
    fn rejects_bad_blocks() {
        let path = DiGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            build_ball(&path, 2, 1),
            Err(AmalgamError::BlockHasCutVertex)
        ));
        assert!(matches!(
            build_ball(&dc3(), 1, 1),
            Err(AmalgamError::BadMultiplicity(1))
        ));
        let big = build_ball(&dc3(), 3, 6);
        assert!(matches!(big, Err(AmalgamError::BallTooLarge { .. })));
    }

    #[test]
    fn triangle_ball_tree() {
        let k3 = dc3().undirected_shadow();
        let ball = build_ball(&k3, 2, 1).unwrap();
        let tree = ball_block_cut_tree(&ball).unwrap();
        assert_eq!(tree.cut_vertices(), &[0, 1, 2]);
        assert_eq!(tree.blocks().len(), 4);
        assert_eq!(tree.node_count(), 7);
        let root = ball.tree_node_of_block(&tree, 0);
        assert_eq!(ball.block_of_tree_node(&tree, root), Some(0));
        // vertex 3 hangs off 0; vertex 5 hangs off 1
        assert_eq!(
            tree.tree_distance(TreeNode::Vertex(0), TreeNode::Vertex(3))
                .unwrap(),
            2
        );
        assert_eq!(
            tree.tree_distance(TreeNode::Vertex(3), TreeNode::Vertex(5))
                .unwrap(),
            6
        );
        assert_eq!(
            tree.tree_distance(TreeNode::Vertex(1), TreeNode::Vertex(3))
                .unwrap(),
            4
        );
    }
}
