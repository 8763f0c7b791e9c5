//! Small named semigroups used in tests, examples and the acceptance suite.

use itertools::Itertools;

use crate::algebra::{CayleyTable, ElementId};

fn build(k: usize, f: impl Fn(usize, usize) -> usize) -> CayleyTable {
    let cells = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
    CayleyTable::from_cells_unchecked(k, cells)
}

pub fn trivial() -> CayleyTable {
    build(1, |_, _| 0)
}

/// `x·y = x`.
pub fn left_zero(k: usize) -> CayleyTable {
    build(k, |x, _| x)
}

/// `x·y = y`.
pub fn right_zero(k: usize) -> CayleyTable {
    build(k, |_, y| y)
}

/// Every product is `0`.
pub fn null(k: usize) -> CayleyTable {
    build(k, |_, _| 0)
}

/// Addition modulo `k`.
pub fn cyclic_group(k: usize) -> CayleyTable {
    build(k, |x, y| (x + y) % k)
}

/// `C₂ × C₂` as bitwise xor on `0..4`.
pub fn klein_four() -> CayleyTable {
    build(4, |x, y| x ^ y)
}

/// Permutations of `{0, 1, 2}` in lexicographic order of their one-line
/// notation; `i·j` applies `j` first, then `i`.
pub fn symmetric_group_3() -> CayleyTable {
    let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
    build(6, |i, j| {
        let composed: Vec<usize> = (0..3).map(|x| perms[i][perms[j][x]]).collect();
        perms.iter().position(|p| *p == composed).expect("closed under composition")
    })
}

/// Ids of the transpositions in [`symmetric_group_3`].
pub const S3_TRANSPOSITIONS: [ElementId; 3] = [1, 2, 5];
/// Ids of the 3-cycles in [`symmetric_group_3`].
pub const S3_THREE_CYCLES: [ElementId; 2] = [3, 4];

/// Every group of order at most six, one per isomorphism class.
pub fn groups_up_to_six() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("C1", trivial()),
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("V4", klein_four()),
        ("C5", cyclic_group(5)),
        ("C6", cyclic_group(6)),
        ("S3", symmetric_group_3()),
    ]
}
