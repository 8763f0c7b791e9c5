use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{adjoin_identity, satisfies_condition, CayleyTable, ElementId};
use crate::conjugacy::{compose_in_view, nontransitive_triple, p_relation, transitive_closure};

use super::{collect_tables, EnumerationConfig, EnumerationError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CounterexampleKind {
    NotTransitive,
    CompositionFailed,
}

/// A theorem violation, with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub kind: CounterexampleKind,
    pub table: Vec<Vec<ElementId>>,
    pub n: u32,
    pub triple: (ElementId, ElementId, ElementId),
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub order: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionCount {
    pub order: usize,
    pub n: u32,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub orders_checked: Vec<usize>,
    pub n_min: u32,
    pub n_max: u32,
    pub semigroups_enumerated: Vec<OrderCount>,
    pub condition_satisfiers: Vec<ConditionCount>,
    pub transitivity_failures_among_satisfiers: usize,
    pub witness_compositions_checked: u64,
    pub witness_compositions_failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    /// No transitivity failure and no failed composition anywhere.
    pub fn theorem_holds(&self) -> bool {
        self.transitivity_failures_among_satisfiers == 0 && self.witness_compositions_failed == 0
    }

    pub fn total_semigroups(&self) -> usize {
        self.semigroups_enumerated.iter().map(|c| c.count).sum()
    }
}

#[derive(Default)]
struct TableOutcome {
    satisfied: Vec<u32>,
    transitivity_failures: usize,
    checked: u64,
    failed: u64,
    counterexamples: Vec<Counterexample>,
}

fn check_table(s: &CayleyTable, n_range: &RangeInclusive<u32>) -> TableOutcome {
    let mut out = TableOutcome::default();
    let satisfied: Vec<u32> = n_range
        .clone()
        .filter(|&n| satisfies_condition(s, n).map(|r| r.holds).unwrap_or(false))
        .collect();
    if satisfied.is_empty() {
        return out;
    }
    let view = adjoin_identity(s);
    let relation = p_relation(s);
    let violation = (transitive_closure(&relation) != relation)
        .then(|| nontransitive_triple(&relation).expect("closure differs, so a triple exists"));

    let chain_links = crate::conjugacy::witnesses(s);
    let k = s.order();
    let mut into = vec![Vec::new(); k];
    let mut out_of = vec![Vec::new(); k];
    for &(a, b, w) in &chain_links {
        into[b].push((a, w));
        out_of[a].push((b, w));
    }

    for &n in &satisfied {
        if let Some(triple) = violation {
            out.transitivity_failures += 1;
            out.counterexamples.push(Counterexample {
                kind: CounterexampleKind::NotTransitive,
                table: s.to_rows(),
                n,
                triple,
                detail: "a ~p b and b ~p c but not a ~p c".into(),
            });
        }
        for b in 0..k {
            for &(a, w_ab) in &into[b] {
                for &(c, w_bc) in &out_of[b] {
                    out.checked += 1;
                    if let Err(err) = compose_in_view(&view, n, w_ab, w_bc) {
                        out.failed += 1;
                        out.counterexamples.push(Counterexample {
                            kind: CounterexampleKind::CompositionFailed,
                            table: s.to_rows(),
                            n,
                            triple: (a, b, c),
                            detail: format!("{err} (w_ab = {w_ab:?}, w_bc = {w_bc:?})"),
                        });
                    }
                }
            }
        }
    }
    out.satisfied = satisfied;
    out
}

/// Check transitivity of `~p` and every witness composition over all
/// semigroups of order `1..=max_order` (up to isomorphism) satisfying the
/// condition for some `n` in `n_range`.
pub fn verify_theorem(max_order: usize, n_range: RangeInclusive<u32>) -> Result<VerificationReport, EnumerationError> {
    verify_theorem_with_jobs(max_order, n_range, 1)
}

pub fn verify_theorem_with_jobs(
    max_order: usize,
    n_range: RangeInclusive<u32>,
    jobs: usize,
) -> Result<VerificationReport, EnumerationError> {
    let (n_min, n_max) = (*n_range.start(), *n_range.end());
    if n_min < 2 || n_min > n_max {
        return Err(EnumerationError::BadRange { start: n_min, end: n_max });
    }
    EnumerationConfig::all(max_order).validate()?;
    let pool = super::thread_pool(jobs)?;

    let mut report = VerificationReport {
        orders_checked: (1..=max_order).collect(),
        n_min,
        n_max,
        semigroups_enumerated: Vec::new(),
        condition_satisfiers: Vec::new(),
        transitivity_failures_among_satisfiers: 0,
        witness_compositions_checked: 0,
        witness_compositions_failed: 0,
        counterexamples: Vec::new(),
    };
    for order in 1..=max_order {
        let tables = collect_tables(&EnumerationConfig::all(order), jobs)?;
        let outcomes: Vec<TableOutcome> =
            pool.install(|| tables.par_iter().map(|s| check_table(s, &n_range)).collect());

        report.semigroups_enumerated.push(OrderCount {
            order,
            count: tables.len(),
        });
        for n in n_range.clone() {
            let count = outcomes.iter().filter(|o| o.satisfied.contains(&n)).count();
            report.condition_satisfiers.push(ConditionCount { order, n, count });
        }
        for o in outcomes {
            report.transitivity_failures_among_satisfiers += o.transitivity_failures;
            report.witness_compositions_checked += o.checked;
            report.witness_compositions_failed += o.failed;
            report.counterexamples.extend(o.counterexamples);
        }
    }
    Ok(report)
}
