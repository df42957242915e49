//! Level partitions along which a fuzzy set is nearly constant.

use crate::compacta::{k_entourage_contains, EntourageRef};
use crate::error::{Error, Result};
use crate::fuzzy::step::StepFuzzySet;
use crate::rational::Rational;

/// A partition `0 = α_0 < .. < α_n = 1` with
/// `(u_{α_k+}, u_{α_{k+1}}) ∈ K[V_ε]` for every `k`.
///
/// For a step fuzzy set the jump levels already work: between jumps the
/// cut is constant, so each pair is a pair of equal cuts.
pub fn level_partition(u: &StepFuzzySet, eps: &Rational) -> Result<Vec<Rational>> {
    let ent = EntourageRef::metric(eps.clone())?;
    let mut out = Vec::with_capacity(u.levels().len() + 1);
    out.push(Rational::zero());
    out.extend(u.levels().iter().cloned());
    if !partition_holds(u, &out, &ent)? {
        return Err(Error::PostCheckFailed("level partition".into()));
    }
    Ok(out)
}

/// Sorted union of two partitions of `[0, 1]`.
pub fn merge_partitions(p: &[Rational], q: &[Rational]) -> Result<Vec<Rational>> {
    for part in [p, q] {
        check_partition(part)?;
    }
    let mut out: Vec<Rational> = p.iter().chain(q).cloned().collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn check_partition(p: &[Rational]) -> Result<()> {
    let ok = p.len() >= 2
        && p[0].is_zero()
        && p[p.len() - 1] == Rational::one()
        && p.windows(2).all(|w| w[0] < w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidLevels("a partition runs strictly from 0 to 1".into()))
    }
}

/// Whether every consecutive pair `(u_{α_k+}, u_{α_{k+1}})` lies in `K[W]`.
pub fn partition_holds(u: &StepFuzzySet, partition: &[Rational], w: &EntourageRef) -> Result<bool> {
    check_partition(partition)?;
    for pair in partition.windows(2) {
        if !k_entourage_contains(w, u.right_limit_cut(&pair[0])?, u.alpha_cut(&pair[1])?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compacta::Compactum;
    use crate::fuzzy::characteristic;
    use crate::ground::GroundSpace;
    use crate::rational::q;

    fn cut(xs: &[Rational]) -> Compactum {
        Compactum::from_coords(&GroundSpace::UnitInterval, xs.iter().cloned()).unwrap()
    }

    fn three_level() -> StepFuzzySet {
        StepFuzzySet::from_cuts(
            vec![q(1, 4), q(2, 3), q(1, 1)],
            vec![cut(&[q(0, 1), q(1, 2), q(1, 1)]), cut(&[q(0, 1), q(1, 2)]), cut(&[q(0, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn own_levels() {
        let tiny = q(1, 1_000_000);
        let k = characteristic(&cut(&[q(1, 3)]));
        assert_eq!(level_partition(&k, &tiny).unwrap(), vec![q(0, 1), q(1, 1)]);
        assert_eq!(level_partition(&three_level(), &tiny).unwrap(), vec![q(0, 1), q(1, 4), q(2, 3), q(1, 1)]);
    }

    #[test]
    fn merges() {
        let a = vec![q(0, 1), q(1, 1)];
        let b = vec![q(0, 1), q(1, 2), q(1, 1)];
        let c = vec![q(0, 1), q(1, 3), q(1, 1)];
        assert_eq!(merge_partitions(&a, &b).unwrap(), b);
        assert_eq!(merge_partitions(&c, &b).unwrap(), vec![q(0, 1), q(1, 3), q(1, 2), q(1, 1)]);
        assert_eq!(merge_partitions(&b, &b).unwrap(), b);
        assert!(merge_partitions(&[q(1, 2), q(1, 1)], &b).is_err());
    }

    #[test]
    fn refinement_keeps_property() {
        let u = three_level();
        let eps = q(1, 1000);
        let ent = EntourageRef::metric(eps.clone()).unwrap();
        let own = level_partition(&u, &eps).unwrap();
        let fine = merge_partitions(&own, &[q(0, 1), q(1, 8), q(1, 2), q(9, 10), q(1, 1)]).unwrap();
        assert!(partition_holds(&u, &fine, &ent).unwrap());
        // dropping a jump level breaks it
        assert!(!partition_holds(&u, &[q(0, 1), q(2, 3), q(1, 1)], &ent).unwrap());
    }
}
