//! Primitivity of connectivity-one digraphs built as trees of copies of a
//! finite block.

pub mod amalgam;
pub mod autgrp;
pub mod cli;
pub mod corpus;
pub mod decomp;
pub mod digraph;
pub mod oracle;
pub mod perm;
pub mod primtest;
pub mod selftest;
pub mod verdict;
