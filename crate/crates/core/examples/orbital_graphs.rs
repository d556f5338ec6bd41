//! Orbital graphs of a group, and what their connectivity says about blocks.

use blockprim::digraph::orbital_graph;
use blockprim::perm::{GeneratedGroup, Permutation};

fn main() {
    let shift = Permutation::from_images((0..6).map(|x| (x + 1) % 6).collect()).unwrap();
    let z6 = GeneratedGroup::new(6, vec![shift]).unwrap();
    for b in 1..6 {
        let g = orbital_graph(&z6, (0, b), 6).unwrap();
        let comps = g.connected_components();
        println!(
            "orbit of (0, {b}): {} edges, components {:?}",
            g.edge_count(),
            comps
        );
    }
}
