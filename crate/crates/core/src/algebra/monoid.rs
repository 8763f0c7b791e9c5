use super::{find_identity, AlgebraError, CayleyTable, ElementId, Magma};

/// `S¹`: the semigroup itself when it is already a monoid, otherwise `S`
/// with one extra identity element at id `k`. Products involving the
/// adjoined identity are computed, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidView<'a> {
    base: &'a CayleyTable,
    identity: ElementId,
    adjoined: bool,
}

pub fn adjoin_identity(s: &CayleyTable) -> MonoidView<'_> {
    match find_identity(s) {
        Some(e) => MonoidView {
            base: s,
            identity: e,
            adjoined: false,
        },
        None => MonoidView {
            base: s,
            identity: s.order(),
            adjoined: true,
        },
    }
}

impl<'a> MonoidView<'a> {
    pub fn base(&self) -> &'a CayleyTable {
        self.base
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn is_adjoined(&self) -> bool {
        self.adjoined
    }

    /// Whether `id` names an element of the underlying semigroup.
    pub fn in_base(&self, id: ElementId) -> bool {
        id < self.base.order()
    }

    pub(crate) fn power_unchecked(&self, a: ElementId, m: u32) -> ElementId {
        let mut acc = self.identity;
        for _ in 0..m {
            acc = self.product(acc, a);
        }
        acc
    }
}

impl Magma for MonoidView<'_> {
    fn order(&self) -> usize {
        self.base.order() + usize::from(self.adjoined)
    }

    #[inline]
    fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        if self.adjoined {
            let k = self.base.order();
            if a == k {
                return b;
            }
            if b == k {
                return a;
            }
        }
        self.base.get(a, b)
    }

    fn unit(&self) -> Option<ElementId> {
        Some(self.identity)
    }

    fn power(&self, a: ElementId, m: u32) -> Result<ElementId, AlgebraError> {
        self.check_id(a)?;
        Ok(self.power_unchecked(a, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn assert_identity_law(view: &MonoidView<'_>) {
        let e = view.identity();
        for x in 0..view.order() {
            assert_eq!(view.product(e, x), x);
            assert_eq!(view.product(x, e), x);
        }
        let k = view.base().order();
        for x in 0..k {
            for y in 0..k {
                assert_eq!(view.product(x, y), view.base().get(x, y));
            }
        }
    }

    #[test]
    fn monoid_is_not_extended() {
        let c3 = samples::cyclic_group(3);
        let view = adjoin_identity(&c3);
        assert!(!view.is_adjoined());
        assert_eq!(view.order(), 3);
        assert_eq!(view.identity(), 0);
        assert_identity_law(&view);
    }

    #[test]
    fn identity_is_adjoined_when_absent() {
        let lz = samples::left_zero(2);
        let view = adjoin_identity(&lz);
        assert!(view.is_adjoined());
        assert_eq!(view.order(), 3);
        assert_eq!(view.identity(), 2);
        assert_identity_law(&view);
    }

    #[test]
    fn trivial_semigroup_is_its_own_monoid() {
        let t = samples::trivial();
        let view = adjoin_identity(&t);
        assert!(!view.is_adjoined());
        assert_eq!(view.order(), 1);
    }

    #[test]
    fn zeroth_power_is_identity() {
        let lz = samples::left_zero(3);
        let view = adjoin_identity(&lz);
        for x in 0..view.order() {
            assert_eq!(view.power(x, 0), Ok(3));
            assert_eq!(view.power(x, 1), Ok(x));
        }
        let c3 = samples::cyclic_group(3);
        assert_eq!(adjoin_identity(&c3).power(2, 0), Ok(0));
        assert_eq!(adjoin_identity(&c3).power(2, 2), Ok(1));
    }
}
