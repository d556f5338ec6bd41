//! Command-line front end. [`run`] holds all behaviour so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 on success, 1 when an analysis precondition fails (or a
//! block is out of scope), 2 on parse, IO and usage errors. Every failure
//! ends with one `error[code]: explanation` line on stderr.

pub mod blockfile;
pub mod dot;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::amalgam::{ball_vertex_count, build_ball, AmalgamBall, AmalgamError};
use crate::decomp::{self, DecompError};
use crate::digraph::DiGraph;
use crate::primtest::{self, PrimError};
use crate::selftest;
use crate::verdict::{
    bounded_word_orbit_check, congruence_propagation, decide, orbital_disconnection_witness,
    StabilizerPair, Verdict, VerdictError,
};

pub use blockfile::{parse_block_file, serialize, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "blockprim",
    version,
    about = "Primitivity of tree-like amalgams of a finite block digraph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report on a block: size, automorphism group, transitivity, primitivity.
    Analyze { file: PathBuf },
    /// Decide primitivity of the amalgam.
    Decide {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        multiplicity: usize,
    },
    /// Build a finite ball of the amalgam.
    Ball {
        file: PathBuf,
        #[command(flatten)]
        shape: Shape,
        /// Write the ball as Graphviz.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compute a finite witness on a ball.
    #[command(subcommand)]
    Witness(Witness),
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long, default_value_t = 3)]
    radius: usize,
    #[arg(long, default_value_t = 2)]
    multiplicity: usize,
}

#[derive(Debug, Subcommand)]
enum Witness {
    /// Orbit graph of a pair in an imprimitive block.
    Orbital {
        file: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        /// Defaults to a partner of vertex 0 with a disconnected orbital graph.
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Bounded check that stabilizer words never carry beta to alpha.
    OrbitCheck {
        file: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        #[arg(long, default_value_t = 1)]
        beta: usize,
    },
    /// Congruence propagation from one related pair.
    Propagate {
        file: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        #[arg(long, default_value_t = 1)]
        beta: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

impl Failure {
    fn precondition(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            exit: 1,
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            exit: 2,
            code: "parse",
            message: e.to_string(),
        }
    }
}

fn amalgam_code(e: &AmalgamError) -> &'static str {
    match e {
        AmalgamError::NotConnected => "not-connected",
        AmalgamError::BlockHasCutVertex => "cut-vertex",
        AmalgamError::BlockNotVertexTransitive => "not-vertex-transitive",
        AmalgamError::BlockTooSmall => "block-too-small",
        AmalgamError::BadMultiplicity(_) => "multiplicity",
        AmalgamError::BallTooLarge { .. } => "ball-too-large",
        AmalgamError::VertexNotInterior(_) | AmalgamError::VertexOutOfRange(_) => "vertex",
        AmalgamError::Aut(_) => "automorphism-search",
        _ => "amalgam",
    }
}

fn prim_code(e: &PrimError) -> &'static str {
    match e {
        PrimError::Decomp(DecompError::NotConnected) => "not-connected",
        PrimError::Aut(_) => "automorphism-search",
        _ => "primitivity",
    }
}

impl From<AmalgamError> for Failure {
    fn from(e: AmalgamError) -> Self {
        Failure::precondition(amalgam_code(&e), e.to_string())
    }
}

impl From<PrimError> for Failure {
    fn from(e: PrimError) -> Self {
        Failure::precondition(prim_code(&e), e.to_string())
    }
}

impl From<VerdictError> for Failure {
    fn from(e: VerdictError) -> Self {
        let code = match &e {
            VerdictError::BlockTooSmall => "block-too-small",
            VerdictError::BlockNotInterior(_) => "block-not-interior",
            VerdictError::VertexNotInterior(_) | VerdictError::BallTooSmall(_) => {
                "vertex-not-interior"
            }
            VerdictError::NoCommonBlock(..) => "no-common-block",
            VerdictError::PreconditionNotImprimitive => "block-primitive",
            VerdictError::PreconditionFailed(_) => "precondition",
            VerdictError::HypothesisFailed(_) => "hypothesis",
            VerdictError::WordNotEvaluable => "not-evaluable",
            VerdictError::BadLetter { .. } => "bad-letter",
            VerdictError::Amalgam(a) => amalgam_code(a),
            VerdictError::Prim(p) => prim_code(p),
            VerdictError::Decomp(_) => "decomposition",
            VerdictError::Graph(_) => "graph",
        };
        Failure::precondition(code, e.to_string())
    }
}

impl From<DecompError> for Failure {
    fn from(e: DecompError) -> Self {
        Failure::precondition("decomposition", e.to_string())
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        exit: 2,
        code: "io",
        message: format!("{}: {e}", path.display()),
    }
}

fn read_block(path: &Path) -> Result<DiGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_block_file(&text).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        ..Failure::from(e)
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Runs the command line `args` (program name first). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            if code == 2 {
                let _ = writeln!(err, "error[usage]: invalid command line");
            }
            return code;
        }
    };
    let mut buffer = String::new();
    let result = dispatch(cli.command, &mut buffer);
    let _ = out.write_all(buffer.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.code, f.message);
            f.exit
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, Failure> {
    use std::fmt::Write as _;
    match command {
        Command::Analyze { file } => {
            let g = read_block(&file)?;
            let r = primtest::classify_block(&g)?;
            let cuts = decomp::cut_vertices(&g)?;
            let _ = writeln!(out, "vertices: {}", r.vertex_count);
            let _ = writeln!(out, "edges: {}", r.edge_count);
            let _ = writeln!(out, "symmetric: {}", yes(g.is_symmetric()));
            let _ = writeln!(out, "aut order: {}", r.aut_order);
            let _ = writeln!(out, "vertex-transitive: {}", yes(r.vertex_transitive));
            let _ = writeln!(out, "edge-transitive: {}", yes(r.edge_transitive));
            let _ = writeln!(out, "primitive: {}", yes(r.primitive));
            let _ = writeln!(out, "regular: {}", yes(r.regular));
            let _ = writeln!(
                out,
                "cut vertices: {}",
                if cuts.is_empty() {
                    "none".into()
                } else {
                    join(&cuts)
                }
            );
            Ok(0)
        }
        Command::Decide { file, multiplicity } => {
            let g = read_block(&file)?;
            let d = decide(&g, multiplicity)?;
            let _ = write!(out, "{d}");
            if d.verdict == Verdict::OutOfScope {
                return Err(Failure::precondition(
                    "out-of-scope",
                    "the criterion needs a vertex-transitive block",
                ));
            }
            Ok(0)
        }
        Command::Ball { file, shape, dot } => {
            let g = read_block(&file)?;
            let ball = build_ball(&g, shape.multiplicity, shape.radius)?;
            let expected = ball_vertex_count(g.vertex_count(), shape.multiplicity, shape.radius)
                .expect("ball was built");
            let _ = writeln!(
                out,
                "block: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            let _ = writeln!(out, "multiplicity: {}", shape.multiplicity);
            let _ = writeln!(out, "radius: {}", shape.radius);
            let _ = writeln!(
                out,
                "vertices: {} (closed form {expected})",
                ball.vertex_count()
            );
            let _ = writeln!(out, "edges: {}", ball.graph().edge_count());
            let _ = writeln!(out, "blocks: {}", ball.blocks().len());
            let _ = writeln!(out, "interior vertices: {}", ball.interior_count());
            if let Some(path) = dot {
                write_file(&path, &dot::ball_to_dot(&ball))?;
                let _ = writeln!(out, "dot: {}", path.display());
            }
            Ok(0)
        }
        Command::Witness(w) => witness(w, out),
        Command::Selftest => {
            let results = selftest::run_all();
            for r in &results {
                let _ = writeln!(out, "{r}");
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(
                out,
                "{} of {} criteria passed",
                results.len() - failed,
                results.len()
            );
            if failed > 0 {
                return Err(Failure::precondition(
                    "selftest",
                    format!("{failed} criteria failed"),
                ));
            }
            Ok(0)
        }
    }
}

fn ball_for(file: &Path, shape: &Shape) -> Result<AmalgamBall, Failure> {
    let g = read_block(file)?;
    Ok(build_ball(&g, shape.multiplicity, shape.radius)?)
}

fn witness(w: Witness, out: &mut String) -> Result<i32, Failure> {
    use std::fmt::Write as _;
    match w {
        Witness::Orbital {
            file,
            shape,
            alpha,
            gamma,
            dot,
        } => {
            let ball = ball_for(&file, &shape)?;
            let gamma = match gamma {
                Some(g) => g,
                None => {
                    let outcome = primtest::is_primitive_higman(ball.amalgam().block_group())?;
                    match (alpha, outcome.witness) {
                        (0, Some((_, b))) => b,
                        (0, None) => return Err(VerdictError::PreconditionNotImprimitive.into()),
                        _ => {
                            return Err(Failure::precondition(
                                "usage",
                                "--gamma is required when --alpha is not 0",
                            ))
                        }
                    }
                }
            };
            let report = orbital_disconnection_witness(&ball, alpha, gamma)?;
            let comps: Vec<String> = report
                .block_components(&ball)
                .iter()
                .map(|c| join(c))
                .collect();
            let _ = writeln!(
                out,
                "pair: {alpha} {gamma} in block {}",
                ball.block(report.block).address
            );
            let _ = writeln!(out, "orbit edges: {}", report.edges.len());
            let _ = writeln!(out, "components: {}", report.components.len());
            let _ = writeln!(out, "block components: {}", comps.join(" "));
            let _ = writeln!(out, "classes: {}", report.classes.len());
            let _ = writeln!(out, "cross edges: {}", report.cross_edges);
            let _ = writeln!(
                out,
                "interior connected: {}",
                yes(report.interior_connected)
            );
            let _ = writeln!(out, "witness: {}", yes(report.is_witness()));
            if let Some(path) = dot {
                write_file(&path, &dot::orbit_to_dot(&ball, &report))?;
                let _ = writeln!(out, "dot: {}", path.display());
            }
            Ok(0)
        }
        Witness::OrbitCheck {
            file,
            shape,
            max_len,
            alpha,
            beta,
        } => {
            let ball = ball_for(&file, &shape)?;
            let pair = StabilizerPair::new(&ball, alpha, beta)?;
            let shared = ball
                .blocks_at(alpha)
                .iter()
                .copied()
                .find(|&b| alpha != beta && ball.label_in(beta, b).is_some())
                .ok_or(VerdictError::NoCommonBlock(alpha, beta))?;
            let y = ball.tree_node_of_block(pair.tree(), shared);
            let report = bounded_word_orbit_check(&pair, y, max_len)?;
            let _ = writeln!(out, "alpha: {alpha}");
            let _ = writeln!(out, "beta: {beta}");
            let _ = writeln!(out, "y: block {}", ball.block(shared).address);
            let _ = writeln!(out, "max length: {max_len}");
            let _ = writeln!(out, "words: {}", report.words_total);
            let _ = writeln!(out, "evaluated: {}", report.words_evaluated);
            let _ = writeln!(out, "skipped: {}", report.words_skipped);
            let _ = writeln!(out, "normal forms skipped: {}", report.normal_forms_skipped);
            let _ = writeln!(out, "max alternations: {}", report.max_alternations);
            let _ = writeln!(out, "max distance: {}", report.max_distance);
            let _ = writeln!(out, "violations: {}", report.violations.len());
            for v in report.violations.iter().take(10) {
                let _ = writeln!(out, "  {:?}: {}", v.kind, v.word);
            }
            let _ = writeln!(out, "beta reaches alpha: {}", yes(report.alpha_reached()));
            if !report.passed() {
                return Err(Failure::precondition(
                    "violations",
                    format!("{} words break the expected shape", report.violations.len()),
                ));
            }
            Ok(0)
        }
        Witness::Propagate {
            file,
            shape,
            alpha,
            beta,
            dot,
        } => {
            let ball = ball_for(&file, &shape)?;
            let p = congruence_propagation(&ball, (alpha, beta))?;
            let _ = writeln!(out, "seed: {alpha} {beta}");
            let _ = writeln!(out, "interior vertices: {}", p.degree());
            let _ = writeln!(out, "classes: {}", p.class_count());
            let _ = writeln!(out, "collapsed: {}", yes(p.is_universal()));
            if let Some(path) = dot {
                let mut class_of: Vec<usize> = (0..p.degree()).map(|v| p.class_of(v)).collect();
                // boundary vertices get a class of their own colour
                class_of.resize(ball.vertex_count(), p.class_count());
                write_file(&path, &dot::classes_to_dot(&ball, &class_of))?;
                let _ = writeln!(out, "dot: {}", path.display());
            }
            Ok(0)
        }
    }
}
