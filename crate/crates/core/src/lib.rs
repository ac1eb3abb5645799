pub mod bounds;
pub mod constructive;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod rational;

pub use graph::{EdgeIndexing, EdgeSet, Graph, GraphError, VertexPartition, VertexSet};
pub use rational::Rational;
