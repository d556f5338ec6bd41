use std::collections::BTreeSet;

use proptest::prelude::*;

use blockprim::autgrp::{aligned_isomorphism, automorphism_group, automorphisms};
use blockprim::corpus;
use blockprim::decomp::{block_cut_tree, cut_vertices, TreeNode};
use blockprim::digraph::{orbital_graph, DiGraph};
use blockprim::oracle;
use blockprim::perm::{GeneratedGroup, Permutation, DEFAULT_ELEMENT_CAP};
use blockprim::primtest::{congruence_closure, congruence_closure_of, is_maximal_stabilizer};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn digraph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            DiGraph::new(n, edges).unwrap()
        })
    })
}

fn connected_digraph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    digraph(max_n).prop_filter("connected", DiGraph::is_connected)
}

proptest! {
    #[test]
    fn composition_is_associative(
        (p, q, r) in (1usize..8).prop_flat_map(|d| (permutation(d), permutation(d), permutation(d)))
    ) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(p.compose(&Permutation::identity(p.degree())).unwrap(), p.clone());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn orbits_partition_the_points(gens in (2usize..8).prop_flat_map(|d| proptest::collection::vec(permutation(d), 1..3))) {
        let d = gens[0].degree();
        let g = GeneratedGroup::new(d, gens).unwrap();
        for a in 0..d {
            for b in 0..d {
                let (oa, ob) = (g.orbit(a).unwrap(), g.orbit(b).unwrap());
                prop_assert!(oa == ob || oa.is_disjoint(&ob));
            }
        }
    }

    #[test]
    fn shadow_is_idempotent(g in digraph(7)) {
        let s = g.undirected_shadow();
        prop_assert_eq!(s.vertex_count(), g.vertex_count());
        prop_assert_eq!(s.undirected_shadow(), s.clone());
        prop_assert!(s.is_symmetric());
    }

    #[test]
    fn distance_triangle_inequality(g in connected_digraph(7)) {
        let n = g.vertex_count();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let d = |x, y| g.distance(x, y).unwrap().finite().unwrap();
                    prop_assert!(d(a, c) <= d(a, b) + d(b, c));
                }
            }
        }
    }

    #[test]
    fn decomposition_matches_oracle(g in connected_digraph(8)) {
        let cuts = cut_vertices(&g).unwrap();
        prop_assert_eq!(&cuts, &oracle::cut_vertices(&g));
        let tree = block_cut_tree(&g).unwrap();
        let covered: BTreeSet<usize> = tree.blocks().iter().flatten().copied().collect();
        prop_assert_eq!(covered.len(), g.vertex_count());
        for v in 0..g.vertex_count() {
            let count = tree.blocks().iter().filter(|b| b.contains(&v)).count();
            if cuts.contains(&v) {
                prop_assert!(count >= 2);
            } else {
                prop_assert_eq!(count, 1);
            }
        }
        prop_assert_eq!(tree.node_count(), cuts.len() + tree.blocks().len());
        prop_assert_eq!(tree.edge_count() + 1, tree.node_count());
    }

    #[test]
    fn geodesics_reverse(g in connected_digraph(7), a in 0usize..7, b in 0usize..7) {
        let n = g.vertex_count();
        let tree = block_cut_tree(&g).unwrap();
        let (a, b) = (TreeNode::Vertex(a % n), TreeNode::Vertex(b % n));
        let forward = tree.tree_geodesic(a, b).unwrap().closed().to_vec();
        let mut backward = tree.tree_geodesic(b, a).unwrap().closed().to_vec();
        backward.reverse();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn automorphisms_match_oracle(g in digraph(6)) {
        let found = automorphisms(&g).unwrap();
        prop_assert_eq!(&found, &oracle::automorphisms(&g));
        for p in &found {
            prop_assert_eq!(g.relabel(p).unwrap(), g.clone());
        }
        let shadow: BTreeSet<Permutation> = automorphisms(&g.undirected_shadow()).unwrap().into_iter().collect();
        prop_assert!(found.iter().all(|p| shadow.contains(p)));
    }

    #[test]
    fn aligned_isomorphisms_are_isomorphisms(g in digraph(6), p in permutation(6), a in 0usize..6) {
        let n = g.vertex_count();
        let q = Permutation::from_images(p.images().iter().copied().filter(|&x| x < n).collect()).unwrap();
        let h = g.relabel(&q).unwrap();
        let a = a % n;
        let phi = aligned_isomorphism(&g, a, &h, q.image(a)).unwrap().expect("q is one");
        prop_assert_eq!(phi.image(a), q.image(a));
        prop_assert_eq!(g.relabel(&phi).unwrap(), h);
    }
}

#[test]
fn orbit_stabilizer() {
    for (name, g) in corpus::transitive_groups() {
        let order = g.order(DEFAULT_ELEMENT_CAP).unwrap();
        for a in 0..g.degree() {
            let stab = g.point_stabilizer(a, DEFAULT_ELEMENT_CAP).unwrap();
            let s = stab.order(DEFAULT_ELEMENT_CAP).unwrap();
            assert_eq!(s * g.orbit(a).unwrap().len(), order, "{name} at {a}");
        }
        if g.is_regular() {
            assert!(g.is_transitive() && order == g.degree(), "{name}");
        }
    }
}

#[test]
fn orbital_graphs_are_invariant() {
    for (name, g) in corpus::transitive_groups() {
        for b in 1..g.degree() {
            let og = orbital_graph(&g, (0, b), g.degree()).unwrap();
            assert!(og.has_edge(0, b));
            for p in g.generators() {
                assert!(og.is_automorphism(p), "{name} pair (0, {b})");
            }
        }
    }
}

#[test]
fn automorphism_groups_preserve_edges() {
    for (name, g) in corpus::blocks() {
        for p in automorphism_group(&g).unwrap().generators() {
            let image: BTreeSet<(usize, usize)> =
                g.edges().map(|(u, v)| (p.image(u), p.image(v))).collect();
            assert_eq!(&image, g.edge_set(), "{name}");
        }
    }
}

#[test]
fn congruences_are_invariant_and_monotone() {
    for (name, g) in corpus::transitive_groups() {
        let n = g.degree();
        for b in 1..n {
            let p = congruence_closure(&g, (0, b)).unwrap();
            assert!(
                g.generators().iter().all(|s| p.is_invariant_under(s)),
                "{name}"
            );
            for c in 1..n {
                let bigger = congruence_closure_of(&g, &[(0, b), (1 % n, c)]).unwrap();
                assert!(p.refines(&bigger), "{name}");
            }
        }
    }
}

#[test]
fn maximality_is_point_independent() {
    for (name, g) in corpus::transitive_groups() {
        let at_zero = is_maximal_stabilizer(&g, 0).unwrap();
        for a in 1..g.degree() {
            assert_eq!(
                is_maximal_stabilizer(&g, a).unwrap(),
                at_zero,
                "{name} at {a}"
            );
        }
    }
}
