use std::cmp::Ordering;

use itertools::Itertools;

use super::{CayleyTable, ElementId};

/// Compare the relabeling of `s` by inverse permutation `inv` (new label
/// `i` is old element `inv[i]`) against `cells`, row-major.
fn compare_relabeled(s: &CayleyTable, inv: &[ElementId], fwd: &[ElementId], cells: &[ElementId]) -> Ordering {
    let k = s.order();
    for i in 0..k {
        for j in 0..k {
            let relabeled = fwd[s.get(inv[i], inv[j])];
            match relabeled.cmp(&cells[i * k + j]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
    }
    Ordering::Equal
}

fn inverse(perm: &[ElementId]) -> Vec<ElementId> {
    let mut inv = vec![0; perm.len()];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    inv
}

/// The lexicographically least relabeling of `s`, comparing tables by
/// their row-major flattening. Scans all `k!` labelings.
pub fn canonical_form(s: &CayleyTable) -> CayleyTable {
    let k = s.order();
    let mut best = s.clone();
    for inv in (0..k).permutations(k) {
        let fwd = inverse(&inv);
        if compare_relabeled(s, &inv, &fwd, best.cells()) == Ordering::Less {
            best = s.permute(&fwd);
        }
    }
    best
}

/// Whether `s` already equals its canonical form.
pub fn is_canonical(s: &CayleyTable) -> bool {
    let k = s.order();
    (0..k).permutations(k).all(|inv| {
        let fwd = inverse(&inv);
        compare_relabeled(s, &inv, &fwd, s.cells()) != Ordering::Less
    })
}

pub fn is_isomorphic(s: &CayleyTable, t: &CayleyTable) -> bool {
    s.order() == t.order() && canonical_form(s) == canonical_form(t)
}
