use thiserror::Error;

use crate::graph::Vertex;
use crate::predicates::PredicateReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller handed in something outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed graph, certificate or option input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A hypothesis of the theorem fails; the report carries the witness.
    #[error("hypothesis `{predicate}` does not hold")]
    Predicate {
        predicate: &'static str,
        report: PredicateReport,
    },

    /// State that the theory rules out. Always carries the offending vertices.
    #[error("internal consistency violated: {message} (witness {witness:?})")]
    Internal { message: String, witness: Vec<Vertex> },

    /// No admissible (target, base) pair while part of the goal is uncovered.
    #[error("no admissible extension step; uncovered goal vertices {uncovered:?}")]
    Progress { uncovered: Vec<Vertex> },

    /// The truncation ball is too small for the requested construction.
    #[error("truncation radius {radius} is too small ({reason}); try radius {suggested}")]
    RadiusTooSmall {
        radius: usize,
        suggested: usize,
        reason: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>, witness: impl IntoIterator<Item = Vertex>) -> Self {
        Error::Internal {
            message: msg.into(),
            witness: witness.into_iter().collect(),
        }
    }
}
