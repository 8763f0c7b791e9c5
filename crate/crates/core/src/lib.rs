//! Primary conjugacy on finite semigroups.
//!
//! Elements `a`, `b` of a semigroup `S` are primarily conjugate (`a ~p b`)
//! when `a = uv` and `b = vu` for some `u`, `v` in `S¹`. This crate computes
//! the relation on Cayley-table semigroups, its transitive closure, composes
//! witnesses along chains `a ~p b ~p c` in semigroups satisfying
//! `xy ∈ {yx, (xy)ⁿ}`, and checks transitivity exhaustively over every
//! semigroup of small order.

pub mod algebra;
pub mod conjugacy;
pub mod enumeration;
pub mod samples;

pub use algebra::{
    adjoin_identity, canonical_form, find_identity, is_commutative, is_isomorphic,
    satisfies_condition, smallest_condition_n, validate_table, AlgebraError, Branch, CayleyTable,
    ConditionReport, ElementId, Magma, MonoidView,
};
pub use conjugacy::{
    compose_witnesses, conjugacy_classes, group_conjugacy, is_p_transitive, p_related, p_relation,
    transitive_closure, ConjugacyError, Partition, Relation, Witness,
};
pub use enumeration::{
    enumerate_tables, find_nontransitive, verify_theorem, EnumerationConfig, EnumerationError,
    Filter, VerificationReport,
};
