//! Avoidable vertices, edges and induced paths, with the search, triangulation,
//! orientation and clique algorithms built on them.

pub mod avoid;
pub mod clique;
pub mod error;
pub mod flow;
pub mod graph;
pub mod lab;
pub mod orient;
pub mod search;
pub mod triangulation;
pub mod twosat;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, InducedPath, WeightedGraph};
