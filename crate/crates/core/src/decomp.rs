//! Cut vertices, blocks and the block-cut-vertex tree.
//!
//! Blocks are the biconnected components of the undirected shadow, found by
//! an iterative depth-first lowpoint search. Bridges are 2-vertex blocks.
//!
//! The tree is bipartite between cut vertices and blocks. Geodesic queries
//! also accept a non-cut vertex, which sits as a pendant leaf on its unique
//! block. Finite balls of an amalgam need this because their boundary
//! vertices are not cut vertices; for cut vertices nothing changes.

use std::collections::VecDeque;

use thiserror::Error;

use crate::digraph::DiGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("{0:?} is not a node of the block-cut-vertex tree")]
    NodeNotInTree(TreeNode),
}

/// A node of the block-cut-vertex tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeNode {
    Vertex(usize),
    Block(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    vertex_count: usize,
    cut_vertices: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    incidences: Vec<(usize, usize)>,
    blocks_of_vertex: Vec<Vec<usize>>,
}

struct Biconnected {
    blocks: Vec<Vec<usize>>,
}

fn biconnected_components(g: &DiGraph) -> Result<Biconnected, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::NotConnected);
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(Biconnected {
            blocks: vec![vec![0]],
        });
    }
    let adj = g.undirected_adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // frames: (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    stack.push(0);
    while let Some(frame) = frames.last_mut() {
        let (v, parent) = (frame.0, frame.1);
        if frame.2 < adj[v].len() {
            let w = adj[v][frame.2];
            frame.2 += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push(w);
                frames.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = vec![u];
                    loop {
                        let x = stack.pop().expect("vertex stack underflow");
                        block.push(x);
                        if x == v {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }
    blocks.sort();
    Ok(Biconnected { blocks })
}

/// Vertices whose removal disconnects the undirected shadow.
pub fn cut_vertices(g: &DiGraph) -> Result<Vec<usize>, DecompError> {
    Ok(block_cut_tree(g)?.cut_vertices)
}

/// Vertex sets of the blocks, sorted (hence ordered by least vertex first).
pub fn blocks(g: &DiGraph) -> Result<Vec<Vec<usize>>, DecompError> {
    Ok(biconnected_components(g)?.blocks)
}

pub fn block_cut_tree(g: &DiGraph) -> Result<BlockCutTree, DecompError> {
    let blocks = biconnected_components(g)?.blocks;
    let n = g.vertex_count();
    let mut blocks_of_vertex = vec![Vec::new(); n];
    for (b, vs) in blocks.iter().enumerate() {
        for &v in vs {
            blocks_of_vertex[v].push(b);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| blocks_of_vertex[v].len() >= 2).collect();
    let mut incidences = Vec::new();
    for &c in &cut_vertices {
        for &b in &blocks_of_vertex[c] {
            incidences.push((c, b));
        }
    }
    Ok(BlockCutTree {
        vertex_count: n,
        cut_vertices,
        blocks,
        incidences,
        blocks_of_vertex,
    })
}

/// A tree path as a node sequence, with the usual open/closed trims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geodesic(Vec<TreeNode>);

impl Geodesic {
    /// `[a, b]`
    pub fn closed(&self) -> &[TreeNode] {
        &self.0
    }

    /// `(a, b)`
    pub fn open(&self) -> &[TreeNode] {
        if self.0.len() < 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// `[a, b)`
    pub fn half_open_end(&self) -> &[TreeNode] {
        &self.0[..self.0.len() - 1]
    }

    /// `(a, b]`
    pub fn half_open_start(&self) -> &[TreeNode] {
        &self.0[1..]
    }

    /// Number of tree edges on the path.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The tree rooted at one node: depths, plus for every other node the
/// neighbour of the root through which it is reached. Two nodes lie in the
/// same component of `T \ {root}` exactly when they share that neighbour.
#[derive(Debug, Clone)]
pub struct RootedTree {
    root: TreeNode,
    depth: Vec<usize>,
    branch: Vec<usize>,
    parent: Vec<usize>,
    vertex_count: usize,
}

impl RootedTree {
    fn index(&self, node: TreeNode) -> usize {
        match node {
            TreeNode::Vertex(v) => v,
            TreeNode::Block(b) => self.vertex_count + b,
        }
    }

    pub fn root(&self) -> TreeNode {
        self.root
    }

    pub fn depth(&self, node: TreeNode) -> usize {
        self.depth[self.index(node)]
    }

    /// `true` when `a` and `b` lie in the same component of `T \ {root}`.
    /// The root itself belongs to no component.
    pub fn same_component(&self, a: TreeNode, b: TreeNode) -> bool {
        let (ia, ib) = (self.index(a), self.index(b));
        let r = self.index(self.root);
        ia != r && ib != r && self.branch[ia] == self.branch[ib]
    }

    /// The neighbour of the root on the path towards `node`.
    pub fn branch(&self, node: TreeNode) -> Option<TreeNode> {
        let i = self.index(node);
        if i == self.index(self.root) {
            None
        } else {
            Some(self.node_at(self.branch[i]))
        }
    }

    pub fn parent(&self, node: TreeNode) -> Option<TreeNode> {
        let i = self.index(node);
        if i == self.index(self.root) {
            None
        } else {
            Some(self.node_at(self.parent[i]))
        }
    }

    fn node_at(&self, i: usize) -> TreeNode {
        if i < self.vertex_count {
            TreeNode::Vertex(i)
        } else {
            TreeNode::Block(i - self.vertex_count)
        }
    }
}

impl BlockCutTree {
    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `(cut vertex, block id)` incidences, grouped by cut vertex.
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.incidences
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.blocks_of_vertex.get(v).is_some_and(|b| b.len() >= 2)
    }

    /// Ids of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.blocks_of_vertex[v]
    }

    /// `|V1| + |V2|`.
    pub fn node_count(&self) -> usize {
        self.cut_vertices.len() + self.blocks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.incidences.len()
    }

    /// The block id whose vertex set is exactly `vertices` (sorted).
    pub fn block_id(&self, vertices: &[usize]) -> Option<usize> {
        self.blocks
            .binary_search_by(|b| b.as_slice().cmp(vertices))
            .ok()
    }

    pub fn contains(&self, node: TreeNode) -> bool {
        match node {
            TreeNode::Vertex(v) => v < self.vertex_count,
            TreeNode::Block(b) => b < self.blocks.len(),
        }
    }

    fn check(&self, node: TreeNode) -> Result<(), DecompError> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(DecompError::NodeNotInTree(node))
        }
    }

    fn extended_index(&self, node: TreeNode) -> usize {
        match node {
            TreeNode::Vertex(v) => v,
            TreeNode::Block(b) => self.vertex_count + b,
        }
    }

    fn extended_node(&self, i: usize) -> TreeNode {
        if i < self.vertex_count {
            TreeNode::Vertex(i)
        } else {
            TreeNode::Block(i - self.vertex_count)
        }
    }

    /// Neighbours of a node, counting non-cut vertices as pendant leaves.
    pub fn neighbors(&self, node: TreeNode) -> Vec<TreeNode> {
        match node {
            TreeNode::Vertex(v) => self.blocks_of_vertex[v]
                .iter()
                .map(|&b| TreeNode::Block(b))
                .collect(),
            TreeNode::Block(b) => self.blocks[b]
                .iter()
                .map(|&v| TreeNode::Vertex(v))
                .collect(),
        }
    }

    /// Breadth-first structure of the tree hung from `root`.
    pub fn rooted_at(&self, root: TreeNode) -> Result<RootedTree, DecompError> {
        self.check(root)?;
        let total = self.vertex_count + self.blocks.len();
        let r = self.extended_index(root);
        let mut depth = vec![usize::MAX; total];
        let mut branch = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        depth[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(i) = queue.pop_front() {
            for nb in self.neighbors(self.extended_node(i)) {
                let j = self.extended_index(nb);
                if depth[j] == usize::MAX {
                    depth[j] = depth[i] + 1;
                    parent[j] = i;
                    branch[j] = if i == r { j } else { branch[i] };
                    queue.push_back(j);
                }
            }
        }
        Ok(RootedTree {
            root,
            depth,
            branch,
            parent,
            vertex_count: self.vertex_count,
        })
    }

    /// The unique path from `a` to `b`, both included.
    pub fn tree_geodesic(&self, a: TreeNode, b: TreeNode) -> Result<Geodesic, DecompError> {
        self.check(a)?;
        let rooted = self.rooted_at(b)?;
        let mut path = vec![a];
        let mut cur = a;
        while let Some(p) = rooted.parent(cur) {
            path.push(p);
            cur = p;
        }
        Ok(Geodesic(path))
    }

    pub fn tree_distance(&self, a: TreeNode, b: TreeNode) -> Result<usize, DecompError> {
        self.check(a)?;
        Ok(self.rooted_at(b)?.depth(a))
    }
}
