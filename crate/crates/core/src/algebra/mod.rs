//! Finite semigroups given by Cayley tables, the monoid completion `S¹`,
//! and the structural predicates used throughout the crate.

mod canon;
mod condition;
mod monoid;
mod table;
pub mod text;

pub use canon::{canonical_form, is_canonical, is_isomorphic};
pub use condition::{satisfies_condition, smallest_condition_n, Branch, ConditionReport};
pub use monoid::{adjoin_identity, MonoidView};
pub use table::{find_identity, is_commutative, validate_table, CayleyTable};

use thiserror::Error;

/// Positional element id. In a carrier of order `k` the valid ids are
/// `0..k`; an adjoined identity of `S¹` takes id `k`.
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("table order must be at least 1")]
    EmptyTable,
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("OUT_OF_RANGE: entry {entry} at row {row}, column {col} is not in 0..{order}")]
    OutOfRange {
        entry: i64,
        row: usize,
        col: usize,
        order: usize,
    },
    #[error("NOT_ASSOCIATIVE: ({i}*{j})*{l} != {i}*({j}*{l})")]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("ZERO_POWER_IN_SEMIGROUP: a^0 is undefined without an identity")]
    ZeroPowerInSemigroup,
    #[error("BAD_EXPONENT: n = {0}, expected n > 1")]
    BadExponent(u32),
    #[error("element {id} is not in 0..{order}")]
    InvalidElement { id: ElementId, order: usize },
}

impl AlgebraError {
    /// Stable upper-case tag used in machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::EmptyTable
            | AlgebraError::RowCount { .. }
            | AlgebraError::RowLength { .. } => "BAD_SHAPE",
            AlgebraError::OutOfRange { .. } => "OUT_OF_RANGE",
            AlgebraError::NotAssociative { .. } => "NOT_ASSOCIATIVE",
            AlgebraError::ZeroPowerInSemigroup => "ZERO_POWER_IN_SEMIGROUP",
            AlgebraError::BadExponent(_) => "BAD_EXPONENT",
            AlgebraError::InvalidElement { .. } => "INVALID_ELEMENT",
        }
    }
}

/// A finite carrier with a binary operation addressed by positional ids.
///
/// Implemented by [`CayleyTable`] (a bare semigroup) and [`MonoidView`]
/// (`S¹`). Only the latter has an identity, which is what makes `a⁰` legal.
pub trait Magma {
    fn order(&self) -> usize;

    /// Product of two valid ids. Panics on out-of-range ids; use
    /// [`Magma::checked_product`] for untrusted input.
    fn product(&self, a: ElementId, b: ElementId) -> ElementId;

    /// The distinguished identity of the carrier. A bare [`CayleyTable`]
    /// reports `None` even when it happens to be a monoid; only `S¹` carries
    /// one.
    fn unit(&self) -> Option<ElementId>;

    fn checked_product(&self, a: ElementId, b: ElementId) -> Result<ElementId, AlgebraError> {
        self.check_id(a)?;
        self.check_id(b)?;
        Ok(self.product(a, b))
    }

    fn check_id(&self, id: ElementId) -> Result<(), AlgebraError> {
        if id < self.order() {
            Ok(())
        } else {
            Err(AlgebraError::InvalidElement {
                id,
                order: self.order(),
            })
        }
    }

    /// `a^m`, left-associated. `m = 0` yields the identity when there is one.
    fn power(&self, a: ElementId, m: u32) -> Result<ElementId, AlgebraError> {
        self.check_id(a)?;
        if m == 0 {
            return self.unit().ok_or(AlgebraError::ZeroPowerInSemigroup);
        }
        let mut acc = a;
        for _ in 1..m {
            acc = self.product(acc, a);
        }
        Ok(acc)
    }
}
