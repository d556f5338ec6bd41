//! Brute-force reference computations for small inputs. They share no code
//! with the main algorithms beyond the basic types.

use std::collections::BTreeSet;

use crate::digraph::DiGraph;
use crate::perm::Permutation;

/// Largest degree the exhaustive routines accept.
pub const ORACLE_LIMIT: usize = 10;

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len())
        .rev()
        .find(|&j| a[j] > a[i - 1])
        .expect("exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    assert!(n <= ORACLE_LIMIT, "oracle limited to degree {ORACLE_LIMIT}");
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_images(a.clone()).expect("identity")];
    while next_permutation(&mut a) {
        out.push(Permutation::from_images(a.clone()).expect("bijection"));
    }
    out
}

/// Automorphisms by assigning images one vertex at a time, abandoning an
/// assignment as soon as an edge or non-edge among assigned vertices breaks.
pub fn automorphisms(g: &DiGraph) -> Vec<Permutation> {
    let n = g.vertex_count();
    assert!(n <= ORACLE_LIMIT, "oracle limited to degree {ORACLE_LIMIT}");
    fn rec(g: &DiGraph, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let u = images.len();
        if u == g.vertex_count() {
            out.push(Permutation::from_images(images.clone()).expect("bijection"));
            return;
        }
        for x in 0..g.vertex_count() {
            if used[x] {
                continue;
            }
            let consistent = (0..u).all(|w| {
                g.has_edge(u, w) == g.has_edge(x, images[w])
                    && g.has_edge(w, u) == g.has_edge(images[w], x)
            });
            if consistent {
                used[x] = true;
                images.push(x);
                rec(g, images, used, out);
                images.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Closure of `gens` under products, by repeated multiplication.
pub fn group_elements(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let mut elements = BTreeSet::from([Permutation::identity(degree)]);
    loop {
        let mut fresh = Vec::new();
        for a in &elements {
            for g in gens {
                let images: Vec<usize> = (0..degree).map(|i| g.images()[a.images()[i]]).collect();
                let p = Permutation::from_images(images).expect("bijection");
                if !elements.contains(&p) {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return elements;
        }
        elements.extend(fresh);
    }
}

pub fn is_transitive(degree: usize, elements: &BTreeSet<Permutation>) -> bool {
    let reached: BTreeSet<usize> = elements.iter().map(|p| p.images()[0]).collect();
    reached.len() == degree
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= ORACLE_LIMIT, "oracle limited to degree {ORACLE_LIMIT}");
    let mut out = Vec::new();
    let mut rgs = vec![0; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for c in 0..=max + 1 {
            rgs[i] = c;
            rec(i + 1, max.max(c), rgs, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Transitive, and no partition other than the trivial and universal one is
/// preserved by every generator.
pub fn is_primitive(degree: usize, gens: &[Permutation]) -> bool {
    let elements = group_elements(degree, gens);
    if degree < 2 || !is_transitive(degree, &elements) {
        return false;
    }
    set_partitions(degree).into_iter().all(|rgs| {
        let classes = rgs.iter().max().map_or(0, |m| m + 1);
        if classes == 1 || classes == degree {
            return true;
        }
        let invariant = gens.iter().all(|g| {
            (0..degree).all(|a| {
                (0..degree).all(|b| rgs[a] != rgs[b] || rgs[g.images()[a]] == rgs[g.images()[b]])
            })
        });
        !invariant
    })
}

/// Vertices whose removal leaves a disconnected graph on at least one vertex.
pub fn cut_vertices(g: &DiGraph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| {
            let rest = g.without_vertex(v).expect("in range");
            rest.vertex_count() > 0 && !rest.is_connected()
        })
        .collect()
}

/// Independent block report: `(aut order, vertex-transitive, primitive, regular)`.
pub fn block_summary(g: &DiGraph) -> (usize, bool, bool, bool) {
    let auts = automorphisms(g);
    let n = g.vertex_count();
    let set: BTreeSet<Permutation> = auts.iter().cloned().collect();
    let vt = is_transitive(n, &set);
    let primitive = vt && is_primitive(n, &auts);
    (auts.len(), vt, primitive, vt && auts.len() == n)
}
