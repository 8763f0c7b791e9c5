use serde::Serialize;

use crate::algebra::ElementId;

/// A reflexive, symmetric boolean relation on `0..order`.
///
/// Equality compares the relation itself; the `closed` marker is not part
/// of it.
#[derive(Debug, Clone, Eq)]
pub struct Relation {
    order: usize,
    bits: Vec<bool>,
    closed: bool,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.bits == other.bits
    }
}

impl Relation {
    /// The equality relation.
    pub fn identity(order: usize) -> Self {
        let mut bits = vec![false; order * order];
        for i in 0..order {
            bits[i * order + i] = true;
        }
        Relation {
            order,
            bits,
            closed: true,
        }
    }

    /// Reflexive-symmetric hull of `pairs`.
    pub fn from_pairs(order: usize, pairs: impl IntoIterator<Item = (ElementId, ElementId)>) -> Self {
        let mut rel = Relation::identity(order);
        rel.closed = false;
        for (a, b) in pairs {
            rel.insert(a, b);
        }
        rel
    }

    pub(crate) fn insert(&mut self, a: ElementId, b: ElementId) {
        let k = self.order;
        self.bits[a * k + b] = true;
        self.bits[b * k + a] = true;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, a: ElementId, b: ElementId) -> bool {
        self.bits[a * self.order + b]
    }

    /// Row-major boolean grid.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// True when the relation is known to be transitively closed, i.e. it
    /// came out of [`transitive_closure`].
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Related pairs `(a, b)` with `a < b`, row-major.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        let k = self.order;
        (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| self.contains(a, b))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Relation::identity(self.order)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.order).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.order;
        (0..k).all(|i| (0..k).all(|j| self.contains(i, j) == self.contains(j, i)))
    }

    pub fn is_transitive(&self) -> bool {
        let k = self.order;
        (0..k).all(|i| {
            (0..k).all(|j| !self.contains(i, j) || (0..k).all(|l| !self.contains(j, l) || self.contains(i, l)))
        })
    }

    /// Equivalence classes of a closed relation.
    pub fn partition(&self) -> Partition {
        debug_assert!(self.is_transitive());
        let k = self.order;
        let class_of = (0..k)
            .map(|i| (0..k).find(|&j| self.contains(i, j)).unwrap_or(i))
            .collect();
        Partition { class_of }
    }
}

/// Least transitive relation containing `r` (Warshall's algorithm).
pub fn transitive_closure(r: &Relation) -> Relation {
    let k = r.order;
    let mut bits = r.bits.clone();
    for mid in 0..k {
        for i in 0..k {
            if bits[i * k + mid] {
                for j in 0..k {
                    if bits[mid * k + j] {
                        bits[i * k + j] = true;
                    }
                }
            }
        }
    }
    Relation {
        order: k,
        bits,
        closed: true,
    }
}

/// Equivalence classes, each element mapped to the least member of its class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    class_of: Vec<ElementId>,
}

impl Partition {
    pub fn class_of(&self, id: ElementId) -> ElementId {
        self.class_of[id]
    }

    pub fn representatives(&self) -> &[ElementId] {
        &self.class_of
    }

    /// Classes ordered by representative, members ascending.
    pub fn classes(&self) -> Vec<Vec<ElementId>> {
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for (id, &rep) in self.class_of.iter().enumerate() {
            if rep == id {
                classes.push(vec![id]);
            } else {
                let slot = classes.iter_mut().find(|c| c[0] == rep).expect("rep precedes members");
                slot.push(id);
            }
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}
