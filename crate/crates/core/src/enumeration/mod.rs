//! Exhaustive generation of small semigroups and the searches built on it.

pub mod goldens;
mod nontransitive;
mod search;
mod verify;

pub use nontransitive::{find_nontransitive, find_nontransitive_with_jobs, NontransitiveExample, NontransitiveSearch};
pub use search::{collect_tables, enumerate_tables, enumerate_tables_parallel};
pub use verify::{verify_theorem, verify_theorem_with_jobs, Counterexample, CounterexampleKind, VerificationReport};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    Commutative,
    /// `xy ∈ {yx, (xy)ⁿ}` for this `n`.
    Condition(u32),
    /// The condition for some `n` in `2..=n_max`.
    ConditionAny(u32),
}

/// Largest orders the enumerator accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderCaps {
    pub labeled: usize,
    pub dedup: usize,
}

impl Default for OrderCaps {
    fn default() -> Self {
        OrderCaps { labeled: 5, dedup: 6 }
    }
}

impl OrderCaps {
    pub fn for_dedup(&self, dedup: bool) -> usize {
        if dedup {
            self.dedup
        } else {
            self.labeled
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub order: usize,
    pub filter: Filter,
    /// Emit one table per isomorphism class (its canonical form).
    pub dedup: bool,
    pub caps: OrderCaps,
}

impl EnumerationConfig {
    pub fn new(order: usize, filter: Filter, dedup: bool) -> Self {
        EnumerationConfig {
            order,
            filter,
            dedup,
            caps: OrderCaps::default(),
        }
    }

    /// Every semigroup of `order`, up to isomorphism.
    pub fn all(order: usize) -> Self {
        Self::new(order, Filter::All, true)
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        let cap = self.caps.for_dedup(self.dedup);
        if self.order == 0 {
            return Err(EnumerationError::Algebra(AlgebraError::EmptyTable));
        }
        if self.order > cap {
            return Err(EnumerationError::OrderCapExceeded {
                order: self.order,
                cap,
            });
        }
        match self.filter {
            Filter::Condition(n) | Filter::ConditionAny(n) if n < 2 => {
                Err(EnumerationError::Algebra(AlgebraError::BadExponent(n)))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("ORDER_CAP_EXCEEDED: order {order} is above the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("exponent range {start}..={end} must start at 2 or above and be non-empty")]
    BadRange { start: u32, end: u32 },
    #[error("jobs must be at least 1")]
    BadJobs,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl EnumerationError {
    pub fn code(&self) -> &'static str {
        match self {
            EnumerationError::OrderCapExceeded { .. } => "ORDER_CAP_EXCEEDED",
            EnumerationError::BadRange { .. } => "BAD_EXPONENT",
            EnumerationError::BadJobs => "BAD_JOBS",
            EnumerationError::Algebra(e) => e.code(),
        }
    }
}

pub(crate) fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, EnumerationError> {
    if jobs == 0 {
        return Err(EnumerationError::BadJobs);
    }
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction"))
}
