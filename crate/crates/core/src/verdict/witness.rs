use std::collections::{BTreeSet, VecDeque};

use crate::amalgam::{ball_block_cut_tree, AmalgamBall};
use crate::decomp::TreeNode;
use crate::digraph::{orbital_graph, DiGraph};
use crate::primtest::is_primitive_higman;

use super::{block_stabilizer_induced_group, symmetric_pool, VerdictError};

/// The orbit graph of one ordered pair under the ball's structural
/// automorphisms, compared with the classes predicted from the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub alpha: usize,
    pub gamma: usize,
    /// Registry id of the block holding both vertices.
    pub block: usize,
    /// Edges of the orbit graph, including the seed pair.
    pub edges: BTreeSet<(usize, usize)>,
    /// Connected components of the orbit graph over all ball vertices.
    pub components: Vec<Vec<usize>>,
    /// `component_of[v]` indexes `components`.
    pub component_of: Vec<usize>,
    /// Components of the block's own orbital graph, as ball vertices.
    pub block_classes: Vec<Vec<usize>>,
    /// The union of the tree branches at the block through each block class.
    pub classes: Vec<Vec<usize>>,
    /// Orbit edges joining two different classes.
    pub cross_edges: usize,
    pub interior_connected: bool,
}

impl WitnessReport {
    pub fn disconnected(&self) -> bool {
        self.components.len() > 1
    }

    /// At least two classes and no orbit edge between them.
    pub fn is_witness(&self) -> bool {
        self.classes.len() >= 2 && self.cross_edges == 0
    }

    /// The block's vertices grouped by orbit-graph component.
    pub fn block_components(&self, ball: &AmalgamBall) -> Vec<Vec<usize>> {
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for &v in &ball.block(self.block).sorted_vertices() {
            let c = self.component_of[v];
            match groups.iter_mut().find(|(k, _)| *k == c) {
                Some((_, g)) => g.push(v),
                None => groups.push((c, vec![v])),
            }
        }
        groups.into_iter().map(|(_, g)| g).collect()
    }
}

/// Builds the orbit graph of `(alpha, gamma)` for two interior vertices of
/// one interior block whose induced group is imprimitive.
pub fn orbital_disconnection_witness(
    ball: &AmalgamBall,
    alpha: usize,
    gamma: usize,
) -> Result<WitnessReport, VerdictError> {
    for v in [alpha, gamma] {
        if v >= ball.vertex_count() || !ball.is_interior(v) {
            return Err(VerdictError::VertexNotInterior(v));
        }
    }
    let block = ball
        .blocks_at(alpha)
        .iter()
        .copied()
        .find(|&b| alpha != gamma && ball.label_in(gamma, b).is_some())
        .ok_or(VerdictError::NoCommonBlock(alpha, gamma))?;
    let h = block_stabilizer_induced_group(ball, block)?;
    if is_primitive_higman(&h)?.primitive {
        return Err(VerdictError::PreconditionNotImprimitive);
    }
    let la = ball.label_in(alpha, block).expect("in block");
    let lg = ball.label_in(gamma, block).expect("in block");
    let labels = &ball.block(block).vertices;
    let lambda = orbital_graph(&h, (la, lg), h.degree())?;
    let block_classes: Vec<Vec<usize>> = lambda
        .connected_components()
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = c.iter().map(|&l| labels[l]).collect();
            vs.sort_unstable();
            vs
        })
        .collect();

    let pool = symmetric_pool(ball)?;
    let mut edges = BTreeSet::from([(alpha, gamma)]);
    let mut queue = VecDeque::from([(alpha, gamma)]);
    while let Some((u, v)) = queue.pop_front() {
        for g in &pool {
            if let (Some(a), Some(b)) = (g.image(u), g.image(v)) {
                if edges.insert((a, b)) {
                    queue.push_back((a, b));
                }
            }
        }
    }
    let orbit = DiGraph::new(ball.vertex_count(), edges.iter().copied()).expect("injective images");
    let components = orbit.connected_components();
    let mut component_of = vec![0; ball.vertex_count()];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            component_of[v] = i;
        }
    }

    let tree = ball_block_cut_tree(ball)?;
    let x = ball.tree_node_of_block(&tree, block);
    let rooted = tree.rooted_at(x)?;
    let mut class_of_label = vec![0; labels.len()];
    for (i, c) in block_classes.iter().enumerate() {
        for &v in c {
            class_of_label[ball.label_in(v, block).expect("in block")] = i;
        }
    }
    let mut classes = vec![Vec::new(); block_classes.len()];
    let class_of: Vec<usize> = (0..ball.vertex_count())
        .map(|v| {
            let Some(TreeNode::Vertex(delta)) = rooted.branch(TreeNode::Vertex(v)) else {
                unreachable!("neighbours of a block node are vertices")
            };
            let c = class_of_label[ball.label_in(delta, block).expect("neighbour of the block")];
            classes[c].push(v);
            c
        })
        .collect();
    let cross_edges = edges
        .iter()
        .filter(|&&(u, v)| class_of[u] != class_of[v])
        .count();
    let interior_connected = ball.interior().all(|v| component_of[v] == component_of[0]);
    Ok(WitnessReport {
        alpha,
        gamma,
        block,
        edges,
        components,
        component_of,
        block_classes,
        classes,
        cross_edges,
        interior_connected,
    })
}
