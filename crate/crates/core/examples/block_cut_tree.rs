//! Blocks, cut vertices and tree geodesics of a small connectivity-one graph.

use blockprim::decomp::{block_cut_tree, TreeNode};
use blockprim::digraph::DiGraph;

fn main() {
    // two triangles sharing vertex 2, and a pendant edge at 4
    let g =
        DiGraph::undirected(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
    let tree = block_cut_tree(&g).unwrap();
    println!("blocks: {:?}", tree.blocks());
    println!("cut vertices: {:?}", tree.cut_vertices());
    println!(
        "tree: {} nodes, {} edges",
        tree.node_count(),
        tree.edge_count()
    );
    let path = tree
        .tree_geodesic(TreeNode::Vertex(0), TreeNode::Vertex(5))
        .unwrap();
    println!("geodesic 0 .. 5: {:?}", path.closed());
    println!("open part: {:?}", path.open());
}
