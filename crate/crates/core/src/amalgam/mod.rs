//! The infinite tree of blocks in which every vertex lies in `m` copies of a
//! fixed vertex-transitive block, and its finite balls.
//!
//! Every copy of the block carries the block's own vertex numbering as
//! labels. A child block hangs from its parent vertex at label 0; since the
//! block is vertex-transitive, one labeling serves for every attachment.
//!
//! The blocks at a vertex `u` have a canonical order: the parent block first
//! (the block on the root side), then the child blocks by slot. Automorphisms
//! of the infinite graph are described by an [`AmalgamAutomorphism`] rule and
//! restricted to a ball as a [`BallAutomorphism`]. A ball always keeps the
//! root block in the middle, so a rule that moves the root block is only
//! partially defined on it.

mod address;
mod automorphism;
mod ball;

pub use address::{tree_path, BlockAddress, Node, VertexAddress};
pub use automorphism::{
    extend_automorphism, stabilizer_generators_on_ball, AmalgamAutomorphism, BallAutomorphism,
    Provenance,
};
pub use ball::{ball_block_cut_tree, ball_vertex_count, build_ball, AmalgamBall, RegisteredBlock};

use thiserror::Error;

use crate::autgrp::{self, AutError};
use crate::decomp;
use crate::digraph::DiGraph;
use crate::perm::{GeneratedGroup, Permutation};

/// Largest ball the builder will produce.
pub const BALL_VERTEX_CAP: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmalgamError {
    #[error("block is not connected")]
    NotConnected,
    #[error("block has a cut vertex")]
    BlockHasCutVertex,
    #[error("block is not vertex-transitive")]
    BlockNotVertexTransitive,
    #[error("block needs at least two vertices")]
    BlockTooSmall,
    #[error("multiplicity {0} is below 2")]
    BadMultiplicity(usize),
    #[error("ball would have {vertices} vertices, above the cap of {cap}")]
    BallTooLarge { vertices: u128, cap: usize },
    #[error("expected a ball of radius {expected}, got radius {found}")]
    RadiusMismatch { expected: usize, found: usize },
    #[error("balls are built from different blocks or multiplicities")]
    BallMismatch,
    #[error("not an automorphism of the ball: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid automorphism rule: {0}")]
    InvalidRule(String),
    #[error("vertex {0} is not interior")]
    VertexNotInterior(usize),
    #[error("vertex {0} is not in the ball")]
    VertexOutOfRange(usize),
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// The infinite amalgam of a block `block` with `m` blocks at every vertex.
#[derive(Debug, Clone)]
pub struct Amalgam {
    block: DiGraph,
    multiplicity: usize,
    aut: GeneratedGroup,
    /// `aligned[a][b]`: the lexicographically least automorphism sending label `a` to `b`.
    aligned: Vec<Vec<Permutation>>,
}

impl Amalgam {
    pub fn new(block: DiGraph, multiplicity: usize) -> Result<Self, AmalgamError> {
        if multiplicity < 2 {
            return Err(AmalgamError::BadMultiplicity(multiplicity));
        }
        if block.vertex_count() < 2 {
            return Err(AmalgamError::BlockTooSmall);
        }
        match decomp::cut_vertices(&block) {
            Err(_) => return Err(AmalgamError::NotConnected),
            Ok(c) if !c.is_empty() => return Err(AmalgamError::BlockHasCutVertex),
            Ok(_) => {}
        }
        let aut = autgrp::automorphism_group(&block)?;
        if !aut.is_transitive() {
            return Err(AmalgamError::BlockNotVertexTransitive);
        }
        let n = block.vertex_count();
        let mut aligned = Vec::with_capacity(n);
        for a in 0..n {
            let mut row = Vec::with_capacity(n);
            for b in 0..n {
                let p = autgrp::aligned_isomorphism(&block, a, &block, b)?
                    .expect("vertex-transitive block has every alignment");
                row.push(p);
            }
            aligned.push(row);
        }
        Ok(Amalgam {
            block,
            multiplicity,
            aut,
            aligned,
        })
    }

    pub fn block(&self) -> &DiGraph {
        &self.block
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn block_order(&self) -> usize {
        self.block.vertex_count()
    }

    /// `Aut` of the block, acting on labels.
    pub fn block_group(&self) -> &GeneratedGroup {
        &self.aut
    }

    pub fn aligned(&self, from: usize, to: usize) -> &Permutation {
        &self.aligned[from][to]
    }

    /// Blocks at `u` in canonical order: parent block, then children by slot.
    pub fn blocks_at(&self, u: &VertexAddress) -> Vec<BlockAddress> {
        let mut out = Vec::with_capacity(self.multiplicity);
        out.push(u.parent_block());
        for slot in 0..self.multiplicity - 1 {
            out.push(BlockAddress::Child {
                parent: u.clone(),
                slot,
            });
        }
        out
    }

    /// Label of `u` inside `b`, if `u` lies in `b`.
    pub fn label_in(&self, u: &VertexAddress, b: &BlockAddress) -> Option<usize> {
        match b {
            BlockAddress::Child { parent, slot }
                if parent == u && *slot < self.multiplicity - 1 =>
            {
                Some(0)
            }
            _ if *b == u.parent_block() => Some(u.label()),
            _ => None,
        }
    }

    /// Address validity: slots and labels in range.
    pub fn is_valid_address(&self, u: &VertexAddress) -> bool {
        let steps = u.steps();
        steps[0].1 < self.block_order()
            && steps[1..]
                .iter()
                .all(|&(c, l)| c < self.multiplicity - 1 && l >= 1 && l < self.block_order())
    }
}
