//! On-line coloring games, their game graphs, and the geometric
//! intersection models that realize them.

pub mod engine;
pub mod error;
pub mod games;
pub mod geometry;
pub mod graph;
pub mod rational;
pub mod pipeline;
pub mod strategies;
