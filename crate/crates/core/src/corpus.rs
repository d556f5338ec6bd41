//! Named blocks and permutation groups used by the examples and self-test.

use crate::digraph::DiGraph;
use crate::perm::{GeneratedGroup, Permutation};

fn circulant(n: usize, jumps: &[usize]) -> DiGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &d in jumps {
            edges.push((i, (i + d) % n));
        }
    }
    DiGraph::new(n, edges).expect("valid circulant")
}

pub fn directed_cycle(n: usize) -> DiGraph {
    circulant(n, &[1])
}

pub fn cycle(n: usize) -> DiGraph {
    circulant(n, &[1, n - 1])
}

pub fn complete(n: usize) -> DiGraph {
    let jumps: Vec<usize> = (1..n).collect();
    circulant(n, &jumps)
}

pub fn triangle() -> DiGraph {
    complete(3)
}

/// `i -> j` iff `j - i` is a nonzero square mod 7.
pub fn paley_tournament_7() -> DiGraph {
    circulant(7, &[1, 2, 4])
}

pub fn single_edge() -> DiGraph {
    DiGraph::new(2, [(0, 1)]).expect("edge")
}

pub fn undirected_edge() -> DiGraph {
    DiGraph::undirected(2, [(0, 1)]).expect("edge")
}

pub fn complete_bipartite_3_3() -> DiGraph {
    let pairs = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
    DiGraph::undirected(6, pairs).expect("K33")
}

pub fn petersen() -> DiGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    DiGraph::undirected(10, pairs).expect("Petersen")
}

/// `K4` minus one edge: 2-connected but not vertex-transitive.
pub fn diamond() -> DiGraph {
    DiGraph::undirected(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).expect("diamond")
}

/// Candidate blocks with short names, in a fixed order.
pub fn blocks() -> Vec<(&'static str, DiGraph)> {
    vec![
        ("triangle", triangle()),
        ("dt3", directed_cycle(3)),
        ("dc4", directed_cycle(4)),
        ("dc5", directed_cycle(5)),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("c6", cycle(6)),
        ("k4", complete(4)),
        ("k5", complete(5)),
        ("k33", complete_bipartite_3_3()),
        ("paley7", paley_tournament_7()),
        ("petersen", petersen()),
        ("edge", single_edge()),
        ("uedge", undirected_edge()),
        ("diamond", diamond()),
    ]
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("valid images")
}

fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cs).expect("valid cycles")
}

fn group(n: usize, gens: Vec<Permutation>) -> GeneratedGroup {
    GeneratedGroup::new(n, gens).expect("equal degrees")
}

fn shift(n: usize) -> Permutation {
    perm((0..n).map(|x| (x + 1) % n).collect())
}

fn reflection(n: usize) -> Permutation {
    perm((0..n).map(|x| (n - x) % n).collect())
}

/// Transitive groups of degree at most 8, with orders at most 500.
pub fn transitive_groups() -> Vec<(&'static str, GeneratedGroup)> {
    vec![
        ("Z3", group(3, vec![shift(3)])),
        ("S3", group(3, vec![cycles(3, &[&[0, 1]]), shift(3)])),
        ("Z4", group(4, vec![shift(4)])),
        ("D4", group(4, vec![shift(4), cycles(4, &[&[1, 3]])])),
        (
            "A4",
            group(4, vec![cycles(4, &[&[0, 1, 2]]), cycles(4, &[&[1, 2, 3]])]),
        ),
        ("S4", group(4, vec![shift(4), cycles(4, &[&[0, 1]])])),
        ("Z5", group(5, vec![shift(5)])),
        ("D5", group(5, vec![shift(5), reflection(5)])),
        (
            "AGL(1,5)",
            group(5, vec![shift(5), perm((0..5).map(|x| 2 * x % 5).collect())]),
        ),
        (
            "A5",
            group(
                5,
                vec![cycles(5, &[&[0, 1, 2]]), cycles(5, &[&[0, 1, 2, 3, 4]])],
            ),
        ),
        ("Z6", group(6, vec![shift(6)])),
        ("D6", group(6, vec![shift(6), reflection(6)])),
        (
            "Z2 wr Z3",
            group(
                6,
                vec![cycles(6, &[&[0, 1]]), cycles(6, &[&[0, 2, 4], &[1, 3, 5]])],
            ),
        ),
        (
            "Z3 wr Z2",
            group(
                6,
                vec![
                    cycles(6, &[&[0, 1, 2]]),
                    cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]),
                ],
            ),
        ),
        ("Z7", group(7, vec![shift(7)])),
        (
            "F21",
            group(7, vec![shift(7), perm((0..7).map(|x| 2 * x % 7).collect())]),
        ),
        ("D7", group(7, vec![shift(7), reflection(7)])),
        ("Z8", group(8, vec![shift(8)])),
        ("D8", group(8, vec![shift(8), reflection(8)])),
        (
            "Z2^3",
            group(
                8,
                vec![
                    perm((0..8).map(|x| x ^ 1).collect()),
                    perm((0..8).map(|x| x ^ 2).collect()),
                    perm((0..8).map(|x| x ^ 4).collect()),
                ],
            ),
        ),
        (
            "S2 wr S4",
            group(
                8,
                vec![
                    cycles(8, &[&[0, 1]]),
                    cycles(8, &[&[0, 2], &[1, 3]]),
                    cycles(8, &[&[0, 2, 4, 6], &[1, 3, 5, 7]]),
                ],
            ),
        ),
    ]
}
