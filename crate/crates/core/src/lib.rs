//! Hamilton cycles in locally connected claw-free graphs.
//!
//! The finite side builds a Hamilton cycle by repeated path extensions and
//! emits a replayable certificate. The infinite side works on balls of a
//! locally finite graph given by a neighbour oracle: it builds the cycle
//! sequence whose limit is a Hamilton circle and checks the conditions that
//! make the limit a circle on the generated prefix.

pub mod cli;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod generators;
pub mod graph;
pub mod io;
pub mod predicates;
pub mod presentation;
pub mod separators;

pub use error::{Error, Result};
pub use graph::{CycleEmbedding, Edge, EdgeSet, FiniteGraph, Vertex, VertexSet};
