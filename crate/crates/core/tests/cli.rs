use std::path::PathBuf;

use blockprim::cli::{parse_block_file, run, serialize};
use blockprim::corpus;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn blockprim(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blockprim").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn analyze_triangle() {
    let (code, out, _) = blockprim(&["analyze", &data("triangle.blk")]);
    assert_eq!(code, 0);
    for line in [
        "vertices: 3",
        "edges: 6",
        "aut order: 6",
        "vertex-transitive: yes",
        "primitive: yes",
        "regular: no",
    ] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
}

#[test]
fn decide_verdicts() {
    let (code, out, _) = blockprim(&["decide", &data("dt3.blk"), "--multiplicity", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next(),
        Some("NOT PRIMITIVE: block is automorphism-regular")
    );
    let (_, out, _) = blockprim(&["decide", &data("paley7.blk")]);
    assert!(out.starts_with("PRIMITIVE"));
    let (_, out, _) = blockprim(&["decide", &data("c4.blk"), "--multiplicity", "3"]);
    assert!(out.starts_with("NOT PRIMITIVE: block is imprimitive\n"));
    assert!(out.contains("multiplicity: 3\n"));
    let (code, out, err) = blockprim(&["decide", &data("diamond.blk")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("OUT OF SCOPE"));
    assert!(err.starts_with("error[out-of-scope]: "));
}

#[test]
fn failures_have_one_coded_line() {
    let loop_file = scratch("loop.blk");
    std::fs::write(&loop_file, "vertices 2\nedge 0 0\n").unwrap();
    let loop_path = loop_file.to_string_lossy().into_owned();
    let missing = scratch("missing.blk").to_string_lossy().into_owned();
    let (triangle, dt3, path, paley7) = (
        data("triangle.blk"),
        data("dt3.blk"),
        data("path.blk"),
        data("paley7.blk"),
    );
    let cases: Vec<(Vec<&str>, i32, &str)> = vec![
        (vec!["analyze", &loop_path], 2, "parse"),
        (vec!["analyze", &missing], 2, "io"),
        (vec!["decide", &path], 1, "cut-vertex"),
        (
            vec!["decide", &dt3, "--multiplicity", "1"],
            1,
            "multiplicity",
        ),
        (vec!["witness", "orbital", &triangle], 1, "block-primitive"),
        (vec!["witness", "propagate", &dt3], 1, "precondition"),
        (vec!["witness", "orbit-check", &triangle], 1, "hypothesis"),
        (vec!["ball", &paley7, "--radius", "5"], 1, "ball-too-large"),
        (vec!["frobnicate"], 2, "usage"),
    ];
    for (args, exit, code) in cases {
        let (got, _, err) = blockprim(&args);
        assert_eq!(got, exit, "{args:?}: {err}");
        let last = err.lines().last().unwrap();
        assert!(
            last.starts_with(&format!("error[{code}]: ")),
            "{args:?}: {err}"
        );
        assert_eq!(err.matches("error[").count(), 1, "{args:?}");
    }
}

#[test]
fn ball_and_dot() {
    let dot = scratch("dt3.dot");
    let path = dot.to_string_lossy().into_owned();
    let (code, out, _) = blockprim(&["ball", &data("dt3.blk"), "--radius", "2", "--dot", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("vertices: 21 (closed form 21)\n"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph ball {"));
    assert_eq!(text.matches("style=dashed").count(), 12);
}

#[test]
fn witnesses() {
    let dot = scratch("c4-orbit.dot");
    let path = dot.to_string_lossy().into_owned();
    let (code, out, _) = blockprim(&[
        "witness",
        "orbital",
        &data("c4.blk"),
        "--radius",
        "2",
        "--dot",
        &path,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("block components: {0,2} {1,3}\n"));
    assert!(out.contains("witness: yes\n"));
    assert!(std::fs::read_to_string(&dot)
        .unwrap()
        .contains("fillcolor=\"#1b9e77\""));

    let (code, out, _) = blockprim(&[
        "witness",
        "orbit-check",
        &data("dt3.blk"),
        "--radius",
        "4",
        "--max-len",
        "6",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("violations: 0\n") && out.contains("beta reaches alpha: no\n"));

    let (code, out, _) = blockprim(&["witness", "propagate", &data("triangle.blk")]);
    assert_eq!(code, 0);
    assert!(out.contains("classes: 1\n") && out.contains("collapsed: yes\n"));
}

#[test]
fn output_is_repeatable() {
    let args = ["witness", "orbital", &data("c4.blk"), "--radius", "2"];
    assert_eq!(blockprim(&args), blockprim(&args));
    let args = ["analyze", &data("paley7.blk")];
    assert_eq!(blockprim(&args), blockprim(&args));
}

#[test]
fn corpus_round_trips_through_text() {
    for (name, g) in corpus::blocks() {
        let text = serialize(&g);
        assert_eq!(parse_block_file(&text).unwrap(), g, "{name}");
        assert_eq!(serialize(&parse_block_file(&text).unwrap()), text, "{name}");
    }
}

#[test]
fn data_files_match_corpus() {
    for name in ["triangle", "dt3", "c4", "dc5", "paley7", "edge", "diamond"] {
        let text = std::fs::read_to_string(data(&format!("{name}.blk"))).unwrap();
        let g = parse_block_file(&text).unwrap();
        let expected = corpus::blocks()
            .into_iter()
            .find(|(n, _)| *n == name)
            .unwrap()
            .1;
        assert_eq!(g, expected, "{name}");
    }
}

proptest::proptest! {
    #[test]
    fn random_graphs_round_trip(n in 1usize..9, bits in proptest::collection::vec(proptest::bool::ANY, 64), symmetric in proptest::bool::ANY) {
        let edges = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v && bits[u * 8 + v]);
        let mut g = blockprim::digraph::DiGraph::new(n, edges).unwrap();
        if symmetric {
            g = g.undirected_shadow();
        }
        proptest::prop_assert_eq!(parse_block_file(&serialize(&g)).unwrap(), g);
    }
}
