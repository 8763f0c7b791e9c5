use serde::Serialize;

use super::{AlgebraError, CayleyTable, ElementId, Magma};

/// Which half of `xy ∈ {yx, (xy)ⁿ}` a pair satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    Commute,
    Power,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub n: u32,
    pub holds: bool,
    order: usize,
    branches: Vec<Branch>,
    /// First `NEITHER` pair in row-major order.
    pub first_failure: Option<(ElementId, ElementId)>,
}

impl ConditionReport {
    pub fn branch(&self, x: ElementId, y: ElementId) -> Branch {
        self.branches[x * self.order + y]
    }

    /// All ordered pairs with their branch, row-major.
    pub fn branches(&self) -> impl Iterator<Item = ((ElementId, ElementId), Branch)> + '_ {
        let k = self.order;
        self.branches
            .iter()
            .enumerate()
            .map(move |(idx, &b)| ((idx / k, idx % k), b))
    }
}

/// Evaluate `xy = yx` and `xy = (xy)ⁿ` for every ordered pair.
pub fn satisfies_condition(s: &CayleyTable, n: u32) -> Result<ConditionReport, AlgebraError> {
    if n <= 1 {
        return Err(AlgebraError::BadExponent(n));
    }
    let k = s.order();
    // (xy)ⁿ only depends on xy, so tabulate zⁿ once
    let nth: Vec<ElementId> = (0..k)
        .map(|z| s.power(z, n).expect("valid id, n > 1"))
        .collect();
    let mut branches = Vec::with_capacity(k * k);
    let mut first_failure = None;
    for x in 0..k {
        for y in 0..k {
            let xy = s.get(x, y);
            let branch = match (xy == s.get(y, x), xy == nth[xy]) {
                (true, true) => Branch::Both,
                (true, false) => Branch::Commute,
                (false, true) => Branch::Power,
                (false, false) => Branch::Neither,
            };
            if branch == Branch::Neither && first_failure.is_none() {
                first_failure = Some((x, y));
            }
            branches.push(branch);
        }
    }
    Ok(ConditionReport {
        n,
        holds: first_failure.is_none(),
        order: k,
        branches,
        first_failure,
    })
}

/// Smallest `n` in `2..=n_max` for which the condition holds. No
/// monotonicity in `n` is assumed; every exponent is tested on its own.
pub fn smallest_condition_n(s: &CayleyTable, n_max: u32) -> Result<Option<u32>, AlgebraError> {
    if n_max < 2 {
        return Err(AlgebraError::BadExponent(n_max));
    }
    for n in 2..=n_max {
        if satisfies_condition(s, n)?.holds {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_commutative;
    use crate::samples;

    #[test]
    fn left_zero_satisfies_n_two() {
        let lz = samples::left_zero(2);
        let report = satisfies_condition(&lz, 2).unwrap();
        assert!(report.holds);
        assert_eq!(report.first_failure, None);
        // diagonal pairs commute, off-diagonal 0·1 = 0 ≠ 1 = 1·0 but are idempotent
        assert_eq!(report.branch(0, 0), Branch::Both);
        assert_eq!(report.branch(1, 1), Branch::Both);
        assert_eq!(report.branch(0, 1), Branch::Power);
        assert_eq!(report.branch(1, 0), Branch::Power);
    }

    #[test]
    fn commutative_tables_hold_for_every_n() {
        for s in [samples::null(3), samples::cyclic_group(4), samples::klein_four(), samples::trivial()] {
            assert!(is_commutative(&s));
            for n in 2..8 {
                let report = satisfies_condition(&s, n).unwrap();
                assert!(report.holds);
                assert!(report
                    .branches()
                    .all(|(_, b)| matches!(b, Branch::Commute | Branch::Both)));
            }
        }
    }

    #[test]
    fn symmetric_group_fails_at_two_on_transpositions() {
        let s3 = samples::symmetric_group_3();
        let report = satisfies_condition(&s3, 2).unwrap();
        assert!(!report.holds);
        let (s, t) = report.first_failure.unwrap();
        let transpositions = samples::S3_TRANSPOSITIONS;
        assert!(transpositions.contains(&s) && transpositions.contains(&t) && s != t);
        let st = s3.get(s, t);
        assert_ne!(st, s3.get(t, s));
        assert_eq!(s3.power(st, 2).unwrap(), s3.get(t, s));
    }

    #[test]
    fn holds_matches_direct_reevaluation() {
        for s in [samples::symmetric_group_3(), samples::left_zero(3), samples::right_zero(2)] {
            for n in 2..8 {
                let report = satisfies_condition(&s, n).unwrap();
                let k = s.order();
                let direct = (0..k).all(|x| {
                    (0..k).all(|y| {
                        let xy = s.get(x, y);
                        xy == s.get(y, x) || xy == s.power(xy, n).unwrap()
                    })
                });
                assert_eq!(report.holds, direct);
            }
        }
    }

    #[test]
    fn smallest_exponent_search() {
        assert_eq!(smallest_condition_n(&samples::left_zero(2), 6), Ok(Some(2)));
        let s3 = samples::symmetric_group_3();
        assert_eq!(smallest_condition_n(&s3, 6), Ok(None));
        assert_eq!(smallest_condition_n(&s3, 7), Ok(Some(7)));
        assert!(satisfies_condition(&s3, 7).unwrap().holds);
    }

    #[test]
    fn bad_exponents() {
        let t = samples::trivial();
        assert_eq!(satisfies_condition(&t, 1).unwrap_err(), AlgebraError::BadExponent(1));
        assert_eq!(satisfies_condition(&t, 0).unwrap_err(), AlgebraError::BadExponent(0));
        assert_eq!(smallest_condition_n(&t, 1).unwrap_err(), AlgebraError::BadExponent(1));
    }
}
