use serde::Serialize;

use crate::algebra::{CayleyTable, ElementId};
use crate::conjugacy::{is_p_transitive, nontransitive_triple, p_related, p_relation, Witness};

use super::{collect_tables, EnumerationConfig, EnumerationError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NontransitiveExample {
    pub table: CayleyTable,
    pub triple: (ElementId, ElementId, ElementId),
    pub witness_ab: Witness,
    pub witness_bc: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NontransitiveSearch {
    pub orders_scanned: Vec<usize>,
    /// Smallest order with a failure, if one was found.
    pub smallest_order: Option<usize>,
    pub examples: Vec<NontransitiveExample>,
}

impl NontransitiveSearch {
    pub fn none_found(&self) -> bool {
        self.examples.is_empty()
    }
}

/// Every semigroup (up to isomorphism) of the smallest order `≤ max_order`
/// on which `~p` is not transitive, each with a re-verified violating triple.
pub fn find_nontransitive(max_order: usize) -> Result<NontransitiveSearch, EnumerationError> {
    find_nontransitive_with_jobs(max_order, 1)
}

pub fn find_nontransitive_with_jobs(max_order: usize, jobs: usize) -> Result<NontransitiveSearch, EnumerationError> {
    EnumerationConfig::all(max_order).validate()?;
    let mut search = NontransitiveSearch {
        orders_scanned: Vec::new(),
        smallest_order: None,
        examples: Vec::new(),
    };
    for order in 1..=max_order {
        search.orders_scanned.push(order);
        for table in collect_tables(&EnumerationConfig::all(order), jobs)? {
            if is_p_transitive(&table) {
                continue;
            }
            let (a, b, c) = nontransitive_triple(&p_relation(&table)).expect("relation is not transitive");
            let witness_ab = p_related(&table, a, b).expect("a ~p b");
            let witness_bc = p_related(&table, b, c).expect("b ~p c");
            assert!(p_related(&table, a, c).is_none(), "a and c must not be p-related");
            search.examples.push(NontransitiveExample {
                table,
                triple: (a, b, c),
                witness_ab,
                witness_bc,
            });
        }
        if !search.examples.is_empty() {
            search.smallest_order = Some(order);
            break;
        }
    }
    Ok(search)
}
