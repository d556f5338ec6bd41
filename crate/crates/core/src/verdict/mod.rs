//! The decision procedure for amalgams of a block, and the finite witnesses
//! backing each half of it.
//!
//! An amalgam is primitive exactly when its block has at least three
//! vertices and an automorphism group that is primitive but not regular.
//! The witnesses work on finite balls: orbital disconnection when the block
//! is imprimitive, bounded word checks when it is regular, and congruence
//! propagation when it is primitive and not regular.

mod propagation;
mod witness;
mod words;

pub use propagation::{congruence_propagation, Propagator};
pub use witness::{orbital_disconnection_witness, WitnessReport};
pub use words::{
    bounded_word_orbit_check, normal_form_rewrite, CheckReport, GroupWord, Letter, NormalForm,
    Side, StabilizerPair, Syllable, Violation, ViolationKind,
};

use std::fmt;

use thiserror::Error;

use crate::amalgam;
use crate::amalgam::{stabilizer_generators_on_ball, AmalgamBall, AmalgamError, BallAutomorphism};
use crate::decomp::DecompError;
use crate::digraph::{DiGraph, GraphError};
use crate::perm::{GeneratedGroup, Permutation};
use crate::primtest::{self, BlockReport, PrimError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerdictError {
    #[error("block needs at least two vertices")]
    BlockTooSmall,
    #[error("block {0} is not interior to the ball")]
    BlockNotInterior(usize),
    #[error("vertex {0} is not interior to the ball")]
    VertexNotInterior(usize),
    #[error("vertices {0} and {1} do not share a block")]
    NoCommonBlock(usize, usize),
    #[error("the induced block group is primitive")]
    PreconditionNotImprimitive,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("word cannot be evaluated inside the ball")]
    WordNotEvaluable,
    #[error("vertex {0} is not interior; raise the radius")]
    BallTooSmall(usize),
    #[error("generator {index} out of range on side {side:?}")]
    BadLetter { side: Side, index: usize },
    #[error(transparent)]
    Amalgam(#[from] AmalgamError),
    #[error(transparent)]
    Prim(#[from] PrimError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Primitive,
    NotPrimitive,
    OutOfScope,
}

/// A condition that keeps the amalgam from being primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Reason {
    SizeBelowThree,
    NotVertexTransitive,
    BlockImprimitive,
    BlockRegular,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::SizeBelowThree => "size<3",
            Reason::NotVertexTransitive => "not-vertex-transitive",
            Reason::BlockImprimitive => "block-imprimitive",
            Reason::BlockRegular => "block-regular",
        }
    }

    fn explanation(self) -> &'static str {
        match self {
            Reason::SizeBelowThree => "block has fewer than three vertices",
            Reason::NotVertexTransitive => "block is not vertex-transitive",
            Reason::BlockImprimitive => "block is imprimitive",
            Reason::BlockRegular => "block is automorphism-regular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    pub block_report: BlockReport,
    pub multiplicity: usize,
    /// Whether the group induced on the root block of a radius-1 ball equals
    /// the block's automorphism group; `None` when no ball was built.
    pub induced_group_matches: Option<bool>,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.verdict, self.reasons.first()) {
            (Verdict::Primitive, _) => writeln!(
                f,
                "PRIMITIVE: block is primitive and not automorphism-regular"
            )?,
            (Verdict::OutOfScope, _) => {
                writeln!(f, "OUT OF SCOPE: block is not vertex-transitive")?
            }
            (Verdict::NotPrimitive, Some(r)) => writeln!(f, "NOT PRIMITIVE: {}", r.explanation())?,
            (Verdict::NotPrimitive, None) => writeln!(f, "NOT PRIMITIVE")?,
        }
        let tags: Vec<&str> = self.reasons.iter().map(|r| r.tag()).collect();
        writeln!(
            f,
            "reasons: {}",
            if tags.is_empty() {
                "none".to_string()
            } else {
                tags.join(" ")
            }
        )?;
        writeln!(f, "multiplicity: {}", self.multiplicity)?;
        match self.induced_group_matches {
            Some(true) => writeln!(f, "induced block group: equals Aut")?,
            Some(false) => writeln!(f, "induced block group: DIFFERS from Aut")?,
            None => writeln!(f, "induced block group: not checked")?,
        }
        Ok(())
    }
}

/// Classifies the amalgam of `block` with `m` blocks per vertex.
pub fn decide(block: &DiGraph, m: usize) -> Result<Decision, VerdictError> {
    if block.vertex_count() < 2 {
        return Err(VerdictError::BlockTooSmall);
    }
    if m < 2 {
        return Err(AmalgamError::BadMultiplicity(m).into());
    }
    let report = primtest::classify_block(block)?;
    if !primtest::is_block(block) {
        return Err(AmalgamError::BlockHasCutVertex.into());
    }
    let mut reasons = Vec::new();
    if !report.size_ok {
        reasons.push(Reason::SizeBelowThree);
    }
    if !report.vertex_transitive {
        reasons.push(Reason::NotVertexTransitive);
    } else {
        if !report.primitive {
            reasons.push(Reason::BlockImprimitive);
        }
        if report.regular {
            reasons.push(Reason::BlockRegular);
        }
    }
    let verdict = if reasons.is_empty() {
        Verdict::Primitive
    } else if !report.size_ok {
        Verdict::NotPrimitive
    } else if !report.vertex_transitive {
        Verdict::OutOfScope
    } else {
        Verdict::NotPrimitive
    };
    let induced_group_matches = if report.vertex_transitive {
        match amalgam::build_ball(block, m, 1) {
            Ok(ball) => {
                let induced = block_stabilizer_induced_group(&ball, ball.root_block())?;
                Some(same_group(&induced, ball.amalgam().block_group()))
            }
            Err(AmalgamError::BallTooLarge { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    Ok(Decision {
        verdict,
        reasons,
        block_report: report,
        multiplicity: m,
        induced_group_matches,
    })
}

fn same_group(a: &GeneratedGroup, b: &GeneratedGroup) -> bool {
    let cap = crate::perm::DEFAULT_ELEMENT_CAP;
    matches!((a.enumerate_elements(cap), b.enumerate_elements(cap)), (Ok(x), Ok(y)) if x == y)
}

/// Every structural automorphism the witnesses draw on: stabilizer
/// generators at each interior vertex, and lifts of generators of the block
/// group to the root block and to every interior block.
pub fn generator_pool(ball: &AmalgamBall) -> Result<Vec<BallAutomorphism>, VerdictError> {
    let mut pool = Vec::new();
    for v in ball.interior() {
        pool.extend(stabilizer_generators_on_ball(ball, v)?);
    }
    let gens: Vec<Permutation> = ball.amalgam().block_group().generators().to_vec();
    for id in 0..ball.blocks().len() {
        if id == ball.root_block() || ball.is_interior_block(id) {
            for pi in &gens {
                pool.push(ball.lift_block_automorphism(id, pi)?);
            }
        }
    }
    Ok(pool)
}

/// The pool together with the inverse of each element.
pub(crate) fn symmetric_pool(ball: &AmalgamBall) -> Result<Vec<BallAutomorphism>, VerdictError> {
    let pool = generator_pool(ball)?;
    let inverses: Vec<BallAutomorphism> = pool.iter().map(BallAutomorphism::inverse).collect();
    Ok(pool.into_iter().chain(inverses).collect())
}

/// The group induced on the labels of block `id` by the pool elements that
/// map the block onto itself.
pub fn block_stabilizer_induced_group(
    ball: &AmalgamBall,
    id: usize,
) -> Result<GeneratedGroup, VerdictError> {
    if id >= ball.blocks().len() || !ball.is_interior_block(id) {
        return Err(VerdictError::BlockNotInterior(id));
    }
    let mut gens: Vec<Permutation> = generator_pool(ball)?
        .iter()
        .filter_map(|g| g.induced_on_block(ball, id))
        .filter(|p| !p.is_identity())
        .collect();
    gens.sort();
    gens.dedup();
    Ok(GeneratedGroup::new(ball.amalgam().block_order(), gens).expect("label degree"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::build_ball;

    fn dc3() -> DiGraph {
        DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn decisions() {
        let d = decide(&dc3(), 2).unwrap();
        assert_eq!(d.verdict, Verdict::NotPrimitive);
        assert_eq!(d.reasons, vec![Reason::BlockRegular]);
        assert!(d
            .to_string()
            .starts_with("NOT PRIMITIVE: block is automorphism-regular\n"));
        assert_eq!(d.induced_group_matches, Some(true));
        let tri = decide(&dc3().undirected_shadow(), 2).unwrap();
        assert_eq!(tri.verdict, Verdict::Primitive);
        let c4 = DiGraph::undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            decide(&c4, 2).unwrap().reasons,
            vec![Reason::BlockImprimitive]
        );
        let edge = DiGraph::new(2, [(0, 1)]).unwrap();
        let d = decide(&edge, 2).unwrap();
        assert_eq!(d.verdict, Verdict::NotPrimitive);
        assert_eq!(d.reasons[0], Reason::SizeBelowThree);
    }

    #[test]
    fn decide_rejects() {
        assert!(matches!(
            decide(&dc3(), 1),
            Err(VerdictError::Amalgam(AmalgamError::BadMultiplicity(1)))
        ));
        let path = DiGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            decide(&path, 2),
            Err(VerdictError::Amalgam(AmalgamError::BlockHasCutVertex))
        ));
    }

    #[test]
    fn induced_groups() {
        let ball = build_ball(&dc3().undirected_shadow(), 2, 2).unwrap();
        let h = block_stabilizer_induced_group(&ball, 0).unwrap();
        assert_eq!(h.order(100).unwrap(), 6);
        let ball = build_ball(&dc3(), 2, 2).unwrap();
        let h = block_stabilizer_induced_group(&ball, 1).unwrap();
        assert_eq!(h.order(100).unwrap(), 3);
        let last = ball.blocks().len() - 1;
        assert_eq!(
            block_stabilizer_induced_group(&ball, last),
            Err(VerdictError::BlockNotInterior(last))
        );
    }
}
