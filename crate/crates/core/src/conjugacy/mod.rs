//! Primary conjugacy `~p`, its transitive closure `~p*`, and witnesses.

mod compose;
mod group;
mod primary;
mod relation;

pub use compose::{compose_witnesses, compose_witnesses_detailed, Composition, CompositionCase};
pub use group::group_conjugacy;
pub use primary::{
    conjugacy_classes, is_p_transitive, nontransitive_triple, p_related, p_relation, witnesses,
};
pub use relation::{transitive_closure, Partition, Relation};

pub(crate) use compose::compose_in_view;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, ElementId};

/// A pair `(u, v)` of `S¹` ids certifying `uv ~p vu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub u: ElementId,
    pub v: ElementId,
}

impl Witness {
    pub fn new(u: ElementId, v: ElementId) -> Self {
        Witness { u, v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjugacyError {
    #[error("CONDITION_VIOLATED: xy is neither yx nor (xy)^{n} at x = {x}, y = {y}")]
    ConditionViolated { n: u32, x: ElementId, y: ElementId },
    #[error("BAD_WITNESS: {0}")]
    BadWitness(String),
    #[error("COMPOSITION_FAILED: ({x}, {y}) does not certify {a} ~p {c}")]
    CompositionFailed {
        x: ElementId,
        y: ElementId,
        a: ElementId,
        c: ElementId,
    },
    #[error("NOT_A_GROUP: no identity element")]
    NoIdentity,
    #[error("NOT_A_GROUP: element {0} has no two-sided inverse")]
    NotAGroup(ElementId),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ConjugacyError {
    pub fn code(&self) -> &'static str {
        match self {
            ConjugacyError::ConditionViolated { .. } => "CONDITION_VIOLATED",
            ConjugacyError::BadWitness(_) => "BAD_WITNESS",
            ConjugacyError::CompositionFailed { .. } => "COMPOSITION_FAILED",
            ConjugacyError::NoIdentity | ConjugacyError::NotAGroup(_) => "NOT_A_GROUP",
            ConjugacyError::Algebra(e) => e.code(),
        }
    }
}
