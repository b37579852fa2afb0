//! The infinite-graph engine: good tuples, the cut-lemma round, the cycle
//! sequence over a presentation and the extraction checks on its prefix.

pub mod cut_lemma;
pub mod extraction;
pub mod run;
pub mod tuple;

use serde::Serialize;

use crate::error::Error;
use crate::graph::VertexSet;

pub use cut_lemma::{cut_lemma_round, CutLemmaConclusions, CutLemmaOutcome};
pub use extraction::{check_extraction_conditions, ChainReport, ConditionResult, ExtractionReport, ExtractionWitness};
pub use run::{run, run_observed, RoundRecord, RunState};
pub use tuple::{check_tuple, good_extend, GoodTuple, TupleContext, TupleReport, TupleViolation};

/// The truncation ball a construction runs in: its radius and the vertices
/// at exactly that depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub radius: usize,
    pub boundary: VertexSet,
}

impl Truncation {
    pub fn new(radius: usize, boundary: VertexSet) -> Self {
        Truncation { radius, boundary }
    }

    pub fn suggested_radius(&self) -> usize {
        (2 * self.radius).max(self.radius + 10)
    }

    pub fn too_small(&self, reason: impl Into<String>) -> Error {
        Error::RadiusTooSmall {
            radius: self.radius,
            suggested: self.suggested_radius(),
            reason: reason.into(),
        }
    }
}
