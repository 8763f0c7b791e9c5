use serde::Serialize;

use super::{AlgebraError, ElementId, Magma};

/// A validated finite semigroup: a closed, associative `k × k` table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CayleyTable {
    order: usize,
    // row-major; entry `i * order + j` is the product `i·j`
    cells: Vec<ElementId>,
}

/// Validate a raw integer grid as a semigroup of the given order.
///
/// Closure is checked cell by cell in row-major order before associativity;
/// the associativity error names the first failing triple in row-major
/// `(i, j, l)` order.
pub fn validate_table<R: AsRef<[i64]>>(
    order: usize,
    raw: &[R],
) -> Result<CayleyTable, AlgebraError> {
    if order == 0 {
        return Err(AlgebraError::EmptyTable);
    }
    if raw.len() != order {
        return Err(AlgebraError::RowCount {
            expected: order,
            found: raw.len(),
        });
    }
    let mut cells = Vec::with_capacity(order * order);
    for (row, entries) in raw.iter().enumerate() {
        let entries = entries.as_ref();
        if entries.len() != order {
            return Err(AlgebraError::RowLength {
                row,
                expected: order,
                found: entries.len(),
            });
        }
        for (col, &entry) in entries.iter().enumerate() {
            if entry < 0 || entry as u64 >= order as u64 {
                return Err(AlgebraError::OutOfRange {
                    entry,
                    row,
                    col,
                    order,
                });
            }
            cells.push(entry as ElementId);
        }
    }
    let table = CayleyTable { order, cells };
    if let Some((i, j, l)) = table.first_non_associative() {
        return Err(AlgebraError::NotAssociative { i, j, l });
    }
    Ok(table)
}

impl CayleyTable {
    /// Build from rows of ids, running the full validation.
    pub fn from_rows<R: AsRef<[ElementId]>>(rows: &[R]) -> Result<Self, AlgebraError> {
        let raw: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| x as i64).collect())
            .collect();
        validate_table(rows.len(), &raw)
    }

    /// Wrap a row-major cell vector known to be closed and associative.
    /// Only debug builds re-check associativity.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<ElementId>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        debug_assert!(cells.iter().all(|&c| c < order));
        let table = CayleyTable { order, cells };
        debug_assert!(table.first_non_associative().is_none());
        table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[ElementId] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ElementId]> + '_ {
        self.cells.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<ElementId>> {
        self.rows().map(<[ElementId]>::to_vec).collect()
    }

    #[inline]
    pub fn get(&self, a: ElementId, b: ElementId) -> ElementId {
        self.cells[a * self.order + b]
    }

    /// Relabel by `perm`: element `x` of `self` becomes `perm[x]`.
    /// The result satisfies `out[perm[x]][perm[y]] = perm[self[x][y]]`.
    pub fn permute(&self, perm: &[ElementId]) -> CayleyTable {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let k = self.order;
        let mut cells = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                cells[perm[x] * k + perm[y]] = perm[self.get(x, y)];
            }
        }
        CayleyTable { order: k, cells }
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let k = self.order;
        for i in 0..k {
            for j in 0..k {
                let ij = self.get(i, j);
                for l in 0..k {
                    if self.get(ij, l) != self.get(i, self.get(j, l)) {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }
}

impl Magma for CayleyTable {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        self.get(a, b)
    }

    fn unit(&self) -> Option<ElementId> {
        None
    }
}

/// The two-sided identity of `s`, if it has one.
pub fn find_identity(s: &CayleyTable) -> Option<ElementId> {
    let k = s.order();
    (0..k).find(|&e| (0..k).all(|x| s.get(e, x) == x && s.get(x, e) == x))
}

pub fn is_commutative(s: &CayleyTable) -> bool {
    let k = s.order();
    (0..k).all(|i| (i + 1..k).all(|j| s.get(i, j) == s.get(j, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn brute_force_associative(k: usize, cells: &[usize]) -> bool {
        let m = |a: usize, b: usize| cells[a * k + b];
        (0..k).all(|i| (0..k).all(|j| (0..k).all(|l| m(m(i, j), l) == m(i, m(j, l)))))
    }

    #[test]
    fn left_zero_is_valid() {
        let t = validate_table(2, &[[0i64, 0], [1, 1]]).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.product(0, 1), 0);
        assert_eq!(t.product(1, 0), 1);
    }

    #[test]
    fn trivial_semigroup_is_valid() {
        let t = validate_table(1, &[[0i64]]).unwrap();
        assert_eq!(t.cells(), &[0]);
    }

    #[test]
    fn closure_violation_is_reported_with_position() {
        let err = validate_table(2, &[[0i64, 1], [1, 2]]).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::OutOfRange {
                entry: 2,
                row: 1,
                col: 1,
                order: 2
            }
        );
        assert_eq!(err.code(), "OUT_OF_RANGE");
        let err = validate_table(2, &[[0i64, -1], [1, 0]]).unwrap_err();
        assert!(matches!(err, AlgebraError::OutOfRange { entry: -1, row: 0, col: 1, .. }));
    }

    #[test]
    fn first_associativity_failure_in_row_major_order() {
        // (0*0)*1 = 1*1 = 0, 0*(0*1) = 0*0 = 1
        let err = validate_table(2, &[[1i64, 0], [0, 0]]).unwrap_err();
        assert_eq!(err, AlgebraError::NotAssociative { i: 0, j: 0, l: 1 });
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            validate_table::<[i64; 1]>(0, &[]).unwrap_err(),
            AlgebraError::EmptyTable
        );
        assert!(matches!(
            validate_table(2, &[vec![0i64, 0]]),
            Err(AlgebraError::RowCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            validate_table(2, &[vec![0i64, 0], vec![1]]),
            Err(AlgebraError::RowLength { row: 1, .. })
        ));
    }

    #[test]
    fn validation_agrees_with_brute_force_on_all_order_two_tables() {
        let mut accepted = 0;
        for code in 0..16u32 {
            let cells: Vec<usize> = (0..4).map(|b| ((code >> b) & 1) as usize).collect();
            let raw: Vec<Vec<i64>> = cells.chunks(2).map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            let ok = validate_table(2, &raw).is_ok();
            assert_eq!(ok, brute_force_associative(2, &cells));
            accepted += ok as usize;
        }
        assert_eq!(accepted, 8);
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(samples::left_zero(2).product(0, 1), 0);
        assert_eq!(samples::null(2).product(1, 1), 0);
        assert_eq!(samples::null(2).power(1, 2), Ok(0));
        assert_eq!(samples::cyclic_group(3).power(1, 3), Ok(0));
        assert_eq!(
            samples::cyclic_group(3).power(1, 0),
            Err(AlgebraError::ZeroPowerInSemigroup)
        );
        assert!(matches!(
            samples::null(2).checked_product(0, 2),
            Err(AlgebraError::InvalidElement { id: 2, order: 2 })
        ));
    }

    #[test]
    fn identity_detection() {
        assert_eq!(find_identity(&samples::cyclic_group(3)), Some(0));
        assert_eq!(find_identity(&samples::left_zero(2)), None);
        assert_eq!(find_identity(&samples::null(2)), None);
        assert_eq!(find_identity(&samples::trivial()), Some(0));
    }

    #[test]
    fn commutativity() {
        assert!(is_commutative(&samples::null(2)));
        assert!(!is_commutative(&samples::left_zero(2)));
        assert!(is_commutative(&samples::cyclic_group(3)));
        assert!(!is_commutative(&samples::symmetric_group_3()));
    }

    #[test]
    fn permute_relabels_consistently() {
        let s = samples::symmetric_group_3();
        let perm = [3, 1, 4, 0, 5, 2];
        let t = s.permute(&perm);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(t.get(perm[x], perm[y]), perm[s.get(x, y)]);
            }
        }
        assert!(CayleyTable::from_rows(&t.to_rows()).is_ok());
    }
}
