//! Committed golden counts.
//!
//! ```text
//! # order, filter, count
//! 3, all, 24
//! 3, labeled, 113
//! 3, condition(2), 22
//! smallest_nontransitive_order, 4
//! count_at_that_order, 13
//! nontransitive_searched_bound, 5
//! ```
//!
//! The `smallest_nontransitive_order` and `count_at_that_order` lines are
//! omitted when no failure exists up to the searched bound.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{is_commutative, satisfies_condition};

use super::{collect_tables, enumerate_tables, find_nontransitive_with_jobs, EnumerationConfig, EnumerationError, Filter, VerificationReport};

/// The fixture shipped with the crate.
pub const COMMITTED: &str = include_str!("../../fixtures/goldens.txt");

pub const FIXTURE_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/goldens.txt");

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Goldens {
    /// `(order, filter label)` to count; see [`filter_label`].
    pub counts: BTreeMap<(usize, String), usize>,
    pub smallest_nontransitive: Option<(usize, usize)>,
    pub nontransitive_searched_bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenParseError {
    #[error("golden line {line}: {message}")]
    Line { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenMismatch {
    pub order: usize,
    pub filter: String,
    pub expected: Option<usize>,
    pub actual: usize,
}

/// Fixture label for an iso-class count under `filter`. Labeled
/// (dedup-off) counts use the label `labeled`.
pub fn filter_label(filter: Filter) -> String {
    match filter {
        Filter::All => "all".into(),
        Filter::Commutative => "commutative".into(),
        Filter::Condition(n) => format!("condition({n})"),
        Filter::ConditionAny(n) => format!("condition_any({n})"),
    }
}

pub const LABELED: &str = "labeled";

impl Goldens {
    pub fn parse(input: &str) -> Result<Self, GoldenParseError> {
        let mut goldens = Goldens::default();
        let mut smallest_order = None;
        let mut smallest_count = None;
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: &str| GoldenParseError::Line {
                line: line_no,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let number = |s: &str| s.parse::<usize>().map_err(|_| bad("expected a non-negative integer"));
            match fields.as_slice() {
                [order, filter, count] => {
                    goldens.counts.insert((number(order)?, filter.to_string()), number(count)?);
                }
                ["smallest_nontransitive_order", v] => smallest_order = Some(number(v)?),
                ["count_at_that_order", v] => smallest_count = Some(number(v)?),
                ["nontransitive_searched_bound", v] => goldens.nontransitive_searched_bound = Some(number(v)?),
                _ => return Err(bad("unrecognised line")),
            }
        }
        goldens.smallest_nontransitive = match (smallest_order, smallest_count) {
            (Some(o), Some(c)) => Some((o, c)),
            (None, None) => None,
            _ => {
                return Err(GoldenParseError::Line {
                    line: 0,
                    message: "smallest_nontransitive_order and count_at_that_order must appear together".into(),
                })
            }
        };
        Ok(goldens)
    }

    pub fn committed() -> Self {
        Goldens::parse(COMMITTED).expect("committed fixture parses")
    }

    pub fn count(&self, order: usize, label: &str) -> Option<usize> {
        self.counts.get(&(order, label.to_string())).copied()
    }

    pub fn render(&self) -> String {
        let mut out = String::from("# Golden counts from exhaustive enumeration. Regenerate with `pconj verify --regen-goldens`.\n");
        out.push_str("# iso-class counts unless the filter is `labeled`\n# order, filter, count\n");
        for ((order, filter), count) in &self.counts {
            let _ = writeln!(out, "{order}, {filter}, {count}");
        }
        if let Some((order, count)) = self.smallest_nontransitive {
            let _ = writeln!(out, "smallest_nontransitive_order, {order}");
            let _ = writeln!(out, "count_at_that_order, {count}");
        }
        if let Some(bound) = self.nontransitive_searched_bound {
            let _ = writeln!(out, "nontransitive_searched_bound, {bound}");
        }
        out
    }

    /// Mismatches between a verification run and the iso-class and
    /// condition counts recorded here. A missing entry is a mismatch.
    pub fn compare(&self, report: &VerificationReport) -> Vec<GoldenMismatch> {
        let mut mismatches = Vec::new();
        let mut check = |order: usize, filter: String, actual: usize| {
            let expected = self.count(order, &filter);
            if expected != Some(actual) {
                mismatches.push(GoldenMismatch { order, filter, expected, actual });
            }
        };
        for c in &report.semigroups_enumerated {
            check(c.order, filter_label(Filter::All), c.count);
        }
        for c in &report.condition_satisfiers {
            check(c.order, filter_label(Filter::Condition(c.n)), c.count);
        }
        mismatches
    }
}

/// Recompute every golden for orders `1..=max_order` and exponents
/// `2..=n_max`. Labeled counts are included up to the labeled order cap.
///
/// Filtered counts post-filter the iso-class list; every filter is an
/// isomorphism invariant, so this equals enumerating with the filter.
pub fn generate(max_order: usize, n_max: u32, jobs: usize) -> Result<Goldens, EnumerationError> {
    let mut goldens = Goldens::default();
    for order in 1..=max_order {
        let classes = collect_tables(&EnumerationConfig::all(order), jobs)?;
        let mut record = |label: String, count: usize| {
            goldens.counts.insert((order, label), count);
        };
        record(filter_label(Filter::All), classes.len());
        record(
            filter_label(Filter::Commutative),
            classes.iter().filter(|t| is_commutative(t)).count(),
        );
        let labeled = EnumerationConfig::new(order, Filter::All, false);
        if labeled.validate().is_ok() {
            record(LABELED.into(), enumerate_tables(&labeled, |_| {})?);
        }
        for n in 2..=n_max {
            let count = classes
                .iter()
                .filter(|t| satisfies_condition(t, n).map(|r| r.holds).unwrap_or(false))
                .count();
            record(filter_label(Filter::Condition(n)), count);
        }
    }
    let search = find_nontransitive_with_jobs(max_order, jobs)?;
    goldens.smallest_nontransitive = search.smallest_order.map(|o| (o, search.examples.len()));
    goldens.nontransitive_searched_bound = Some(max_order);
    Ok(goldens)
}
