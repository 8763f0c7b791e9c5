use serde::Serialize;

use crate::algebra::{adjoin_identity, satisfies_condition, CayleyTable, ElementId, Magma, MonoidView};

use super::{ConjugacyError, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CompositionCase {
    /// `a = b`: the `b ~p c` witness already certifies `a ~p c`.
    AEqualsB,
    /// `b = c`: the `a ~p b` witness already certifies `a ~p c`.
    BEqualsC,
    /// `x = a₁b₁`, `y = b₂·bⁿ⁻²·a₂`; `middle` is `bⁿ⁻²` in `S¹`.
    Constructed { middle: ElementId },
}

/// A composed witness together with the chain it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub a: ElementId,
    pub b: ElementId,
    pub c: ElementId,
    pub witness: Witness,
    pub case: CompositionCase,
}

/// Given `(a₁, a₂)` certifying `a ~p b` and `(b₁, b₂)` certifying
/// `b ~p c` in a semigroup satisfying `xy ∈ {yx, (xy)ⁿ}`, build `(x, y)`
/// with `xy = a` and `yx = c`.
pub fn compose_witnesses(
    s: &CayleyTable,
    n: u32,
    w_ab: Witness,
    w_bc: Witness,
) -> Result<Witness, ConjugacyError> {
    compose_witnesses_detailed(s, n, w_ab, w_bc).map(|c| c.witness)
}

pub fn compose_witnesses_detailed(
    s: &CayleyTable,
    n: u32,
    w_ab: Witness,
    w_bc: Witness,
) -> Result<Composition, ConjugacyError> {
    let report = satisfies_condition(s, n)?;
    if let Some((x, y)) = report.first_failure {
        return Err(ConjugacyError::ConditionViolated { n, x, y });
    }
    compose_in_view(&adjoin_identity(s), n, w_ab, w_bc)
}

/// Composition against a view whose base is already known to satisfy the
/// condition for `n`. The result is always re-verified.
pub(crate) fn compose_in_view(
    view: &MonoidView<'_>,
    n: u32,
    w_ab: Witness,
    w_bc: Witness,
) -> Result<Composition, ConjugacyError> {
    for (name, w) in [("a~b", w_ab), ("b~c", w_bc)] {
        if w.u >= view.order() || w.v >= view.order() {
            return Err(ConjugacyError::BadWitness(format!(
                "{name} witness ({}, {}) is outside S¹ of order {}",
                w.u,
                w.v,
                view.order()
            )));
        }
    }
    let Witness { u: a1, v: a2 } = w_ab;
    let Witness { u: b1, v: b2 } = w_bc;
    let a = view.product(a1, a2);
    let b = view.product(a2, a1);
    let b_again = view.product(b1, b2);
    let c = view.product(b2, b1);
    if ![a, b, c].iter().all(|&x| view.in_base(x)) {
        return Err(ConjugacyError::BadWitness(
            "witness products must lie in S, not at the adjoined identity".into(),
        ));
    }
    if b != b_again {
        return Err(ConjugacyError::BadWitness(format!(
            "witnesses do not chain: a₂a₁ = {b} but b₁b₂ = {b_again}"
        )));
    }

    let (witness, case) = if a == b {
        (w_bc, CompositionCase::AEqualsB)
    } else if b == c {
        (w_ab, CompositionCase::BEqualsC)
    } else {
        let middle = view.power_unchecked(b, n - 2);
        let x = view.product(a1, b1);
        let y = view.product(view.product(b2, middle), a2);
        (Witness::new(x, y), CompositionCase::Constructed { middle })
    };

    let Witness { u: x, v: y } = witness;
    if view.product(x, y) != a || view.product(y, x) != c {
        return Err(ConjugacyError::CompositionFailed { x, y, a, c });
    }
    Ok(Composition {
        a,
        b,
        c,
        witness,
        case,
    })
}
