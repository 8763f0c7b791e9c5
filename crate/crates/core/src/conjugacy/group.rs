use crate::algebra::{find_identity, CayleyTable};

use super::{ConjugacyError, Relation};

/// Ordinary group conjugacy: `a ~ b` iff `a = g⁻¹bg` for some `g`.
/// Rejects tables that are not groups.
pub fn group_conjugacy(s: &CayleyTable) -> Result<Relation, ConjugacyError> {
    let k = s.order();
    let e = find_identity(s).ok_or(ConjugacyError::NoIdentity)?;
    let inverse = (0..k)
        .map(|x| {
            (0..k)
                .find(|&y| s.get(x, y) == e && s.get(y, x) == e)
                .ok_or(ConjugacyError::NotAGroup(x))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pairs = (0..k).flat_map(|g| {
        let inverse = &inverse;
        (0..k).map(move |b| (s.get(s.get(inverse[g], b), g), b))
    });
    Ok(Relation::from_pairs(k, pairs))
}
