//! Exact domination (γ) and independent domination (i) numbers on trees and
//! small graphs, a certified constructive bound `i(G) <= max(1, Δ/2)·γ(G)`
//! for trees, exhaustive free-tree enumeration, and verification campaigns
//! built on top of them.

pub mod domination;
pub mod edge_list;
pub mod enumeration;
pub mod error;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod proof;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
