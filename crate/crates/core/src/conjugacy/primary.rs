use crate::algebra::{adjoin_identity, CayleyTable, ElementId, Magma, MonoidView};

use super::{transitive_closure, Partition, Relation, Witness};

/// Every `(u, v) ∈ S¹ × S¹` whose products `uv` and `vu` both land in `S`,
/// in row-major order, as `(uv, vu, witness)`.
pub fn witnesses(s: &CayleyTable) -> Vec<(ElementId, ElementId, Witness)> {
    let view = adjoin_identity(s);
    witnesses_in_view(&view)
}

pub(crate) fn witnesses_in_view(view: &MonoidView<'_>) -> Vec<(ElementId, ElementId, Witness)> {
    let m = view.order();
    let mut out = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in 0..m {
            let (a, b) = (view.product(u, v), view.product(v, u));
            if view.in_base(a) && view.in_base(b) {
                out.push((a, b, Witness::new(u, v)));
            }
        }
    }
    out
}

/// First witness `(u, v)` in row-major `S¹` order with `uv = a` and `vu = b`.
pub fn p_related(s: &CayleyTable, a: ElementId, b: ElementId) -> Option<Witness> {
    assert!(a < s.order() && b < s.order(), "elements must lie in S");
    let view = adjoin_identity(s);
    let m = view.order();
    (0..m)
        .flat_map(|u| (0..m).map(move |v| Witness::new(u, v)))
        .find(|w| view.product(w.u, w.v) == a && view.product(w.v, w.u) == b)
}

pub fn p_relation(s: &CayleyTable) -> Relation {
    Relation::from_pairs(
        s.order(),
        witnesses(s).into_iter().map(|(a, b, _)| (a, b)),
    )
}

pub fn is_p_transitive(s: &CayleyTable) -> bool {
    let rel = p_relation(s);
    transitive_closure(&rel) == rel
}

/// Classes of `~p*`.
pub fn conjugacy_classes(s: &CayleyTable) -> Partition {
    transitive_closure(&p_relation(s)).partition()
}

/// First `(a, b, c)` in lexicographic order with `a ~ b`, `b ~ c` and not
/// `a ~ c`.
pub fn nontransitive_triple(r: &Relation) -> Option<(ElementId, ElementId, ElementId)> {
    let k = r.order();
    (0..k)
        .flat_map(|a| (0..k).flat_map(move |b| (0..k).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| r.contains(a, b) && r.contains(b, c) && !r.contains(a, c))
}
