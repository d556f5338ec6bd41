//! Automorphism groups of the bundled blocks.

use blockprim::autgrp::{automorphism_group, automorphism_group_order, is_edge_transitive};
use blockprim::corpus;

fn main() {
    for (name, g) in corpus::blocks() {
        let group = automorphism_group(&g).unwrap();
        println!(
            "{name:<9} |V|={:<2} |Aut|={:<4} generators={} vertex-transitive={} edge-transitive={}",
            g.vertex_count(),
            automorphism_group_order(&g).unwrap(),
            group.generators().len(),
            group.is_transitive(),
            is_edge_transitive(&g).unwrap(),
        );
    }
}
