use proptest::prelude::*;

use blockprim::amalgam::{
    ball_vertex_count, build_ball, extend_automorphism, stabilizer_generators_on_ball,
    AmalgamError, BALL_VERTEX_CAP,
};
use blockprim::corpus;
use blockprim::digraph::DiGraph;
use blockprim::verdict::{
    bounded_word_orbit_check, decide, normal_form_rewrite, orbital_disconnection_witness,
    GroupWord, Propagator, Reason, StabilizerPair, Verdict, VerdictError,
};

/// Corpus blocks the amalgam accepts.
fn amalgam_blocks() -> Vec<(&'static str, DiGraph)> {
    corpus::blocks()
        .into_iter()
        .filter(|(_, g)| build_ball(g, 2, 0).is_ok())
        .collect()
}

#[test]
fn addresses_round_trip() {
    for (name, g) in amalgam_blocks() {
        for m in [2, 3] {
            let ball = build_ball(&g, m, 2).unwrap();
            for v in 0..ball.vertex_count() {
                assert_eq!(ball.vertex_of(ball.address(v)), Some(v), "{name}");
            }
        }
    }
}

#[test]
fn closed_form_and_cap() {
    let g = corpus::cycle(4);
    for k in 0..=4 {
        match build_ball(&g, 2, k) {
            Ok(ball) => assert_eq!(
                Some(ball.vertex_count() as u128),
                ball_vertex_count(4, 2, k)
            ),
            Err(AmalgamError::BallTooLarge { vertices, cap }) => {
                assert!(vertices > BALL_VERTEX_CAP as u128 && cap == BALL_VERTEX_CAP)
            }
            Err(e) => panic!("{e}"),
        }
    }
    assert!(matches!(
        build_ball(&corpus::petersen(), 2, 3),
        Err(AmalgamError::BallTooLarge { .. })
    ));
}

#[test]
fn stabilizers_keep_the_root_block_at_the_vertex() {
    for (name, g) in amalgam_blocks() {
        let ball = build_ball(&g, 2, 2).unwrap();
        for v in 0..g.vertex_count() {
            for s in stabilizer_generators_on_ball(&ball, v).unwrap() {
                assert!(s.fixes(v) && s.is_edge_preserving(ball.graph()), "{name}");
                let image = s
                    .block_image(&ball, ball.root_block())
                    .expect("root block stays in the ball");
                assert!(ball.label_in(v, image).is_some(), "{name}");
            }
        }
    }
}

#[test]
fn extensions_restrict_to_the_inner_ball() {
    for (name, g) in amalgam_blocks() {
        let inner = build_ball(&g, 3, 1).unwrap();
        let outer = build_ball(&g, 3, 2).unwrap();
        for v in 0..g.vertex_count() {
            for s in stabilizer_generators_on_ball(&inner, v).unwrap() {
                if let Ok(e) = extend_automorphism(&inner, &s, &outer) {
                    assert_eq!(
                        e.restrict_to_prefix(inner.vertex_count()),
                        Some(s),
                        "{name}"
                    );
                    assert!(e.is_edge_preserving(outer.graph()), "{name}");
                }
            }
        }
    }
}

/// Largest radius at most `want` whose ball fits under the cap.
fn radius_within_cap(g: &DiGraph, m: usize, want: usize) -> usize {
    (1..=want)
        .rev()
        .find(|&k| {
            ball_vertex_count(g.vertex_count(), m, k).is_some_and(|c| c <= BALL_VERTEX_CAP as u128)
        })
        .unwrap()
}

#[test]
fn imprimitive_blocks_have_a_disconnection_witness() {
    let mut seen = 0;
    for (name, g) in amalgam_blocks() {
        let d = decide(&g, 2).unwrap();
        if !d.reasons.contains(&Reason::BlockImprimitive) {
            continue;
        }
        let ball = build_ball(&g, 2, 2).unwrap();
        let found = (1..g.vertex_count()).any(|gamma| {
            orbital_disconnection_witness(&ball, 0, gamma)
                .is_ok_and(|r| r.is_witness() && r.disconnected())
        });
        assert!(found, "{name}");
        seen += 1;
    }
    assert!(seen >= 3);
}

#[test]
fn regular_blocks_pass_the_word_check() {
    let mut seen = 0;
    for (name, g) in amalgam_blocks() {
        let d = decide(&g, 2).unwrap();
        if !d.reasons.contains(&Reason::BlockRegular) {
            continue;
        }
        let ball = build_ball(&g, 2, 4).unwrap();
        let pair = StabilizerPair::new(&ball, 0, 1).unwrap();
        let y = ball.tree_node_of_block(pair.tree(), ball.root_block());
        let report = bounded_word_orbit_check(&pair, y, 6).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.violations.first());
        seen += 1;
    }
    assert!(seen >= 3);
}

#[test]
fn primitive_blocks_collapse() {
    let mut seen = 0;
    for (name, g) in amalgam_blocks() {
        if decide(&g, 2).unwrap().verdict != Verdict::Primitive {
            continue;
        }
        let radius = radius_within_cap(&g, 2, 3);
        let ball = build_ball(&g, 2, radius).unwrap();
        let deep = (0..ball.interior_count())
            .rev()
            .find(|&v| ball.generation(v) == radius - 1)
            .unwrap();
        let n = g.vertex_count();
        let mut seeds: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        seeds.push((0, deep));
        let propagator = Propagator::new(&ball).unwrap();
        for seed in seeds {
            let p = propagator.run(seed).unwrap();
            assert!(p.is_universal(), "{name} seed {seed:?}");
        }
        seen += 1;
    }
    assert!(seen >= 4);
}

#[test]
fn multiplicity_does_not_change_verdicts() {
    for (name, g) in corpus::blocks() {
        let two = decide(&g, 2).unwrap();
        let three = decide(&g, 3).unwrap();
        assert_eq!(two.verdict, three.verdict, "{name}");
        assert_eq!(two.reasons, three.reasons, "{name}");
    }
}

#[test]
fn decide_rejections() {
    assert!(matches!(
        decide(&DiGraph::empty(1), 2),
        Err(VerdictError::BlockTooSmall)
    ));
    let path = DiGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
    assert!(decide(&path, 2).is_err());
    let split = DiGraph::undirected(4, [(0, 1), (2, 3)]).unwrap();
    assert!(decide(&split, 2).is_err());
    assert_eq!(
        decide(&corpus::diamond(), 2).unwrap().verdict,
        Verdict::OutOfScope
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_preserves_action(choices in proptest::collection::vec(any::<prop::sample::Index>(), 0..10), m in 2usize..4) {
        let ball = build_ball(&corpus::directed_cycle(3), m, 3).unwrap();
        let pair = StabilizerPair::new(&ball, 0, 1).unwrap();
        let y = ball.tree_node_of_block(pair.tree(), ball.root_block());
        let alphabet = pair.alphabet();
        let word = GroupWord::new(choices.iter().map(|i| alphabet[i.index(alphabet.len())]).collect());
        match normal_form_rewrite(&pair, &word, y) {
            Err(VerdictError::WordNotEvaluable) => {}
            Err(e) => panic!("{e}"),
            Ok(nf) => {
                prop_assert!(nf.alternations() <= word.syllables().len());
                for v in pair.qualifying_vertices(y) {
                    let before = pair.evaluate_at(&word.letters, v).unwrap();
                    if before.is_some() {
                        prop_assert_eq!(pair.evaluate_at(&nf.word().letters, v).unwrap(), before);
                    }
                }
            }
        }
    }
}
