//! The acceptance suite: ten end-to-end checks over the corpus, each with a
//! time budget. Shared by the `selftest` subcommand and the test target.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{
    ball_vertex_count, build_ball, extend_automorphism, AmalgamBall, BallAutomorphism, Provenance,
};
use crate::corpus;
use crate::decomp::block_cut_tree;
use crate::digraph::DiGraph;
use crate::oracle;
use crate::perm::{GeneratedGroup, Permutation, DEFAULT_ELEMENT_CAP};
use crate::primtest::{self, is_maximal_stabilizer, is_primitive_congruence, is_primitive_higman};
use crate::verdict::{
    block_stabilizer_induced_group, bounded_word_orbit_check, congruence_propagation, decide,
    normal_form_rewrite, orbital_disconnection_witness, GroupWord, Letter, Reason, Side,
    StabilizerPair, Verdict,
};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    /// The checks held, ignoring time.
    pub correct: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.correct && self.limit.is_none_or(|l| self.elapsed <= l)
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let limit = match self.limit {
            Some(l) => format!("{}s", l.as_secs()),
            None => "-".to_string(),
        };
        write!(
            f,
            "[{status}] {:>2} {:<32} {:>7.2}s / {limit:<4} {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn() -> Result<String, String>;

const CRITERIA: [(usize, &str, Option<u64>, Check); 10] = [
    (1, "oracle triple agreement", Some(5), oracle_agreement),
    (2, "classifications", Some(10), classifications),
    (3, "undirected consistency", None, undirected_consistency),
    (4, "ball construction", Some(10), ball_construction),
    (
        5,
        "automorphism extension",
        Some(20),
        automorphism_extension,
    ),
    (6, "regular-block word check", Some(60), regular_block_words),
    (
        7,
        "imprimitive disconnection",
        Some(10),
        imprimitive_disconnection,
    ),
    (
        8,
        "primitive congruence collapse",
        Some(30),
        congruence_collapse,
    ),
    (9, "normal-form rewriter", Some(30), normal_form_rewriter),
    (
        10,
        "multiplicity independence",
        None,
        multiplicity_independence,
    ),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize) -> Option<CriterionResult> {
    let &(id, name, limit, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (correct, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult {
        id,
        name,
        correct,
        detail,
        elapsed,
        limit: limit.map(Duration::from_secs),
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named(name: &str) -> DiGraph {
    corpus::blocks()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
        .expect("corpus block")
}

fn oracle_agreement() -> Result<String, String> {
    let groups = corpus::transitive_groups();
    let mut primitive = 0;
    for (name, g) in &groups {
        let err = |e: primtest::PrimError| format!("{name}: {e}");
        let higman = is_primitive_higman(g).map_err(err)?.primitive;
        let congruence = is_primitive_congruence(g).map_err(err)?;
        let maximal = is_maximal_stabilizer(g, 0).map_err(err)?;
        let brute = oracle::is_primitive(g.degree(), g.generators());
        ensure(
            higman == congruence && congruence == maximal && maximal == brute,
            || {
                format!("{name}: higman {higman}, congruence {congruence}, maximal {maximal}, brute force {brute}")
            },
        )?;
        primitive += usize::from(higman);
    }
    Ok(format!("{} groups, {primitive} primitive", groups.len()))
}

fn classifications() -> Result<String, String> {
    let expected = [
        ("triangle", Verdict::Primitive, None),
        ("paley7", Verdict::Primitive, None),
        ("dt3", Verdict::NotPrimitive, Some(Reason::BlockRegular)),
        ("dc5", Verdict::NotPrimitive, Some(Reason::BlockRegular)),
        ("c4", Verdict::NotPrimitive, Some(Reason::BlockImprimitive)),
        ("edge", Verdict::NotPrimitive, Some(Reason::SizeBelowThree)),
    ];
    for (name, verdict, reason) in expected {
        let g = named(name);
        let d = decide(&g, 2).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            d.verdict == verdict && d.reasons.first().copied() == reason,
            || format!("{name}: got {:?} {:?}", d.verdict, d.reasons),
        )?;
        let (order, vt, prim, regular) = oracle::block_summary(&g);
        let r = d.block_report;
        ensure(
            r.aut_order == order as u64
                && r.vertex_transitive == vt
                && r.primitive == prim
                && r.regular == regular,
            || {
                format!("{name}: block report {r:?} disagrees with brute force ({order}, {vt}, {prim}, {regular})")
            },
        )?;
    }
    Ok(format!("{} blocks", expected.len()))
}

fn undirected_consistency() -> Result<String, String> {
    let mut checked = 0;
    for (name, g) in corpus::blocks() {
        if !g.is_symmetric() {
            continue;
        }
        // every block of the amalgam is a copy of g, so pairwise isomorphism holds
        let (_, _, primitive, _) = oracle::block_summary(&g);
        let expected = primitive && g.vertex_count() >= 3;
        let d = decide(&g, 2).map_err(|e| format!("{name}: {e}"))?;
        ensure((d.verdict == Verdict::Primitive) == expected, || {
            format!("{name}: decide {:?}, criterion {expected}", d.verdict)
        })?;
        checked += 1;
    }
    Ok(format!("{checked} symmetric blocks"))
}

fn ball_construction() -> Result<String, String> {
    let mut built = 0;
    for name in ["dt3", "dc4", "paley7"] {
        let g = named(name);
        for m in [2, 3] {
            for k in [0, 1, 2] {
                let expected = ball_vertex_count(g.vertex_count(), m, k).ok_or("count overflow")?;
                let ball = build_ball(&g, m, k).map_err(|e| format!("{name} m={m} k={k}: {e}"))?;
                ensure(ball.vertex_count() as u128 == expected, || {
                    format!(
                        "{name} m={m} k={k}: {} vertices, closed form {expected}",
                        ball.vertex_count()
                    )
                })?;
                let tree = block_cut_tree(ball.graph()).map_err(|e| e.to_string())?;
                let mut found: Vec<Vec<usize>> = tree.blocks().to_vec();
                let mut constructed: Vec<Vec<usize>> =
                    ball.blocks().iter().map(|b| b.sorted_vertices()).collect();
                found.sort();
                constructed.sort();
                ensure(found == constructed, || {
                    format!("{name} m={m} k={k}: decomposition differs")
                })?;
                built += 1;
            }
        }
    }
    Ok(format!("{built} balls"))
}

fn ball_permutation(p: &Permutation) -> BallAutomorphism {
    BallAutomorphism::from_images(
        p.images().iter().map(|&x| Some(x)).collect(),
        Provenance::BlockLift,
    )
    .expect("permutation")
}

fn same_group(a: &GeneratedGroup, elements: &[Permutation]) -> Result<bool, String> {
    let order = a.order(DEFAULT_ELEMENT_CAP).map_err(|e| e.to_string())?;
    for p in elements {
        if !a
            .contains(p, DEFAULT_ELEMENT_CAP)
            .map_err(|e| e.to_string())?
        {
            return Ok(false);
        }
    }
    Ok(order == elements.len())
}

fn automorphism_extension() -> Result<String, String> {
    let mut extended = 0;
    let mut blocks = 0;
    for (name, g) in corpus::blocks() {
        let Ok(report) = primtest::classify_block(&g) else {
            continue;
        };
        if !report.vertex_transitive || !primtest::is_block(&g) {
            continue;
        }
        let balls: Vec<AmalgamBall> = (0..=2)
            .map(|r| build_ball(&g, 2, r))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("{name}: {e}"))?;
        let elements = balls[0]
            .amalgam()
            .block_group()
            .enumerate_elements(DEFAULT_ELEMENT_CAP)
            .map_err(|e| e.to_string())?;
        for p in &elements {
            let mut sigma = ball_permutation(p);
            for r in 1..=2 {
                let next = extend_automorphism(&balls[r - 1], &sigma, &balls[r])
                    .map_err(|e| format!("{name}: {e}"))?;
                ensure(
                    next.is_total() && next.is_edge_preserving(balls[r].graph()),
                    || format!("{name}: extension of {p:?} to radius {r} is not an automorphism"),
                )?;
                ensure(
                    next.restrict_to_prefix(balls[r - 1].vertex_count())
                        .as_ref()
                        == Some(&sigma),
                    || {
                        format!(
                            "{name}: extension of {p:?} does not restrict to radius {}",
                            r - 1
                        )
                    },
                )?;
                sigma = next;
            }
            extended += 1;
        }
        let ball = &balls[2];
        let child = ball.blocks_at(1)[1];
        for id in [ball.root_block(), child] {
            let induced =
                block_stabilizer_induced_group(ball, id).map_err(|e| format!("{name}: {e}"))?;
            ensure(same_group(&induced, &elements)?, || {
                format!("{name}: induced group on block {id} differs")
            })?;
        }
        blocks += 1;
    }
    Ok(format!("{extended} automorphisms over {blocks} blocks"))
}

fn regular_block_words() -> Result<String, String> {
    let ball = build_ball(&named("dt3"), 2, 4).map_err(|e| e.to_string())?;
    let pair = StabilizerPair::new(&ball, 0, 1).map_err(|e| e.to_string())?;
    let y = ball.tree_node_of_block(pair.tree(), ball.root_block());
    let report = bounded_word_orbit_check(&pair, y, 6).map_err(|e| e.to_string())?;
    ensure(report.passed(), || {
        format!(
            "{} violations, first {:?}",
            report.violations.len(),
            report.violations.first()
        )
    })?;
    Ok(format!(
        "{} words, {} evaluated, max distance {}",
        report.words_total, report.words_evaluated, report.max_distance
    ))
}

fn imprimitive_disconnection() -> Result<String, String> {
    let ball = build_ball(&named("c4"), 2, 2).map_err(|e| e.to_string())?;
    let report = orbital_disconnection_witness(&ball, 0, 2).map_err(|e| e.to_string())?;
    let components = report.block_components(&ball);
    ensure(report.disconnected() && report.is_witness(), || {
        "orbit graph is connected".into()
    })?;
    ensure(components == vec![vec![0, 2], vec![1, 3]], || {
        format!("root block components {components:?}")
    })?;
    Ok(format!(
        "{} components, {} orbit edges",
        report.components.len(),
        report.edges.len()
    ))
}

fn congruence_collapse() -> Result<String, String> {
    let ball = build_ball(&named("triangle"), 2, 3).map_err(|e| e.to_string())?;
    let first =
        |generation: usize| (0..ball.interior_count()).find(|&v| ball.generation(v) == generation);
    let deep = first(2).ok_or("no generation-2 vertex")?;
    let middle = first(1).ok_or("no generation-1 vertex")?;
    let seeds = [(0, 1), (1, 2), (0, middle), (middle, deep), (0, deep)];
    for seed in seeds {
        let p = congruence_propagation(&ball, seed).map_err(|e| format!("{seed:?}: {e}"))?;
        ensure(p.is_universal(), || {
            format!("seed {seed:?} leaves {} classes", p.class_count())
        })?;
    }
    Ok(format!(
        "{} seeds over {} interior vertices",
        seeds.len(),
        ball.interior_count()
    ))
}

fn normal_form_rewriter() -> Result<String, String> {
    const WANTED: usize = 100;
    let ball = build_ball(&named("dt3"), 3, 3).map_err(|e| e.to_string())?;
    let pair = StabilizerPair::new(&ball, 0, 1).map_err(|e| e.to_string())?;
    let y = ball.tree_node_of_block(pair.tree(), ball.root_block());
    let qualifying = pair.qualifying_vertices(y);
    let alphabet = pair.alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut evaluable, mut attempts) = (0, 0);
    while evaluable < WANTED && attempts < 100 * WANTED {
        attempts += 1;
        let len = rng.gen_range(1..=8);
        let word = GroupWord::new(
            (0..len)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                .collect(),
        );
        let nf = match normal_form_rewrite(&pair, &word, y) {
            Ok(nf) => nf,
            Err(crate::verdict::VerdictError::WordNotEvaluable) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let original: Vec<Option<usize>> = qualifying
            .iter()
            .map(|&v| pair.evaluate_at(&word.letters, v))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if original.iter().any(Option::is_none) {
            continue;
        }
        evaluable += 1;
        ensure(
            nf.syllables.windows(2).all(|w| w[0].side != w[1].side),
            || format!("{word}: sides repeat"),
        )?;
        ensure(nf.alternations() <= word.syllables().len(), || {
            format!("{word}: alternations grew")
        })?;
        for s in &nf.syllables {
            let own = match s.side {
                Side::Alpha => pair.alpha(),
                Side::Beta => pair.beta(),
            };
            let fixes_own = pair
                .evaluate_at(&s.letters, own)
                .map_err(|e| e.to_string())?
                == Some(own);
            let fixes_y = pair
                .letters_fix_node(&s.letters, y)
                .map_err(|e| e.to_string())?;
            ensure(fixes_own && fixes_y == Some(false), || {
                format!("{word}: bad syllable {:?}", s.letters)
            })?;
        }
        let rewritten: Vec<Letter> = nf.word().letters;
        for (&v, &img) in qualifying.iter().zip(&original) {
            let r = pair.evaluate_at(&rewritten, v).map_err(|e| e.to_string())?;
            ensure(r == img, || format!("{word}: acts differently on {v}"))?;
        }
    }
    ensure(evaluable >= WANTED, || {
        format!("only {evaluable} evaluable words in {attempts} attempts")
    })?;
    Ok(format!(
        "{evaluable} words, {} qualifying vertices",
        qualifying.len()
    ))
}

fn multiplicity_independence() -> Result<String, String> {
    let mut compared = 0;
    for (name, g) in corpus::blocks() {
        let two = decide(&g, 2).map_err(|e| format!("{name}: {e}"))?;
        let three = decide(&g, 3).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            two.verdict == three.verdict && two.reasons == three.reasons,
            || {
                format!(
                    "{name}: {:?} for m=2, {:?} for m=3",
                    two.verdict, three.verdict
                )
            },
        )?;
        ensure(
            two.induced_group_matches != Some(false) && three.induced_group_matches != Some(false),
            || format!("{name}: induced block group differs from Aut"),
        )?;
        compared += 1;
    }
    Ok(format!("{compared} blocks"))
}
