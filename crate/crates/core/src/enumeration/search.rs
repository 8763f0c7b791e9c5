use rayon::prelude::*;

use crate::algebra::{is_canonical, satisfies_condition, smallest_condition_n, CayleyTable, ElementId};

use super::{thread_pool, EnumerationConfig, EnumerationError, Filter};

const UNSET: ElementId = ElementId::MAX;

/// Row-major backtracking over a partially filled table.
struct Search<'c> {
    config: &'c EnumerationConfig,
    k: usize,
    cells: Vec<ElementId>,
}

impl<'c> Search<'c> {
    fn new(config: &'c EnumerationConfig) -> Self {
        let k = config.order;
        Search {
            config,
            k,
            cells: vec![UNSET; k * k],
        }
    }

    #[inline]
    fn at(&self, a: ElementId, b: ElementId) -> ElementId {
        self.cells[a * self.k + b]
    }

    /// Check every associativity triple `(x·y)·z = x·(y·z)` that became fully
    /// determined by assigning cell `(i, j)`.
    fn consistent_at(&self, i: usize, j: usize) -> bool {
        let k = self.k;
        let holds = |x: usize, y: usize, z: usize| -> bool {
            let xy = self.at(x, y);
            let yz = self.at(y, z);
            if xy == UNSET || yz == UNSET {
                return true;
            }
            let left = self.at(xy, z);
            let right = self.at(x, yz);
            left == UNSET || right == UNSET || left == right
        };
        for t in 0..k {
            // (i·j)·t and i·(j·t)
            if !holds(i, j, t) {
                return false;
            }
            // (t·i)·j and t·(i·j)
            if !holds(t, i, j) {
                return false;
            }
        }
        for x in 0..k {
            for y in 0..k {
                // the new cell is the outer product of (x·y)·j
                if self.at(x, y) == i && !holds(x, y, j) {
                    return false;
                }
                // the new cell is the outer product of i·(x·y)
                if self.at(x, y) == j && !holds(i, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn candidates(&self, pos: usize) -> std::ops::Range<ElementId> {
        let (i, j) = (pos / self.k, pos % self.k);
        if self.config.filter == Filter::Commutative && j < i {
            let forced = self.at(j, i);
            forced..forced + 1
        } else {
            0..self.k
        }
    }

    fn run(&mut self, pos: usize, stop: usize, emit: &mut dyn FnMut(&Self)) {
        if pos == stop {
            emit(self);
            return;
        }
        let (i, j) = (pos / self.k, pos % self.k);
        for value in self.candidates(pos) {
            self.cells[pos] = value;
            if self.consistent_at(i, j) {
                self.run(pos + 1, stop, emit);
            }
        }
        self.cells[pos] = UNSET;
    }

    fn accept(&self) -> Option<CayleyTable> {
        let table = CayleyTable::from_cells_unchecked(self.k, self.cells.clone());
        let keep = match self.config.filter {
            Filter::All | Filter::Commutative => true,
            Filter::Condition(n) => satisfies_condition(&table, n).map(|r| r.holds).unwrap_or(false),
            Filter::ConditionAny(n_max) => matches!(smallest_condition_n(&table, n_max), Ok(Some(_))),
        };
        (keep && (!self.config.dedup || is_canonical(&table))).then_some(table)
    }
}

/// Stream every associative table matching `config` to `consumer`, in
/// lexicographic row-major order. With `dedup` on, only canonical forms are
/// emitted, so each isomorphism class appears exactly once.
pub fn enumerate_tables(
    config: &EnumerationConfig,
    mut consumer: impl FnMut(&CayleyTable),
) -> Result<usize, EnumerationError> {
    config.validate()?;
    let mut count = 0;
    let mut search = Search::new(config);
    let total = config.order * config.order;
    search.run(0, total, &mut |s| {
        if let Some(table) = s.accept() {
            count += 1;
            consumer(&table);
        }
    });
    Ok(count)
}

/// Same stream as [`enumerate_tables`], with the search split by first-row
/// prefix across `jobs` workers. Per-prefix output is buffered and handed to
/// `consumer` in prefix order, so the stream does not depend on `jobs`.
pub fn enumerate_tables_parallel(
    config: &EnumerationConfig,
    jobs: usize,
    mut consumer: impl FnMut(&CayleyTable),
) -> Result<usize, EnumerationError> {
    config.validate()?;
    let pool = thread_pool(jobs)?;
    let k = config.order;
    let mut prefixes = Vec::new();
    Search::new(config).run(0, k, &mut |s| prefixes.push(s.cells.clone()));

    let buckets: Vec<Vec<CayleyTable>> = pool.install(|| {
        prefixes
            .into_par_iter()
            .map(|cells| {
                let mut search = Search { config, k, cells };
                let mut out = Vec::new();
                search.run(k, k * k, &mut |s| out.extend(s.accept()));
                out
            })
            .collect()
    });
    let mut count = 0;
    for table in buckets.iter().flatten() {
        count += 1;
        consumer(table);
    }
    Ok(count)
}

pub fn collect_tables(config: &EnumerationConfig, jobs: usize) -> Result<Vec<CayleyTable>, EnumerationError> {
    let mut out = Vec::new();
    enumerate_tables_parallel(config, jobs, |t| out.push(t.clone()))?;
    Ok(out)
}
