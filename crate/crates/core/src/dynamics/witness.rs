//! Constructive transitivity of the Zadeh extension.

use serde::Serialize;

use crate::compacta::{pull_back_cloud, shared_iterate, Compactum};
use crate::dynamics::orbit::iterate_fuzzy;
use crate::error::{Error, Result};
use crate::fuzzy::{d_infty, level_partition, merge_partitions, StepFuzzySet};
use crate::ground::DynMap;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelEntry {
    pub level: Rational,
    pub size: usize,
}

/// A fuzzy set `w` near `u` whose `n`-th image is near `v`, with the
/// distances measured after construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub w: StepFuzzySet,
    pub n: usize,
    /// `d_∞(u, w)`.
    pub d_source: Rational,
    /// `d_∞(f̂ⁿ(w), v)`.
    pub d_target: Rational,
    /// Size of the finite set built at each level of the merged partition.
    pub per_level_log: Vec<LevelEntry>,
}

/// Builds `w` with `d_∞(u, w) < ε` and `d_∞(f̂ⁿ(w), v) < ε`, `n ≥ 1`.
///
/// On the merged partition `γ_1 < .. < γ_m = 1` of `u` and `v`, each level
/// gets a finite set `K_i` of exact `n`-fold preimages of `v_{γ_i}`, one
/// inside each closed `ε/2` ball around a point of `u_{γ_i}`; a single `n`
/// (the slowest ball) serves every level. The cuts of `w` are the tail
/// unions `w_{γ_i} = ⋃_{k≥i} K_k`.
pub fn fuzzy_witness(f: &DynMap, u: &StepFuzzySet, v: &StepFuzzySet, eps: &Rational) -> Result<WitnessCertificate> {
    if !f.has_mixing_oracle() {
        return Err(Error::NoMixingOracle);
    }
    if !eps.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    if u.space() != v.space() || f.space() != u.space() {
        return Err(Error::SpaceMismatch);
    }
    let partition = merge_partitions(&level_partition(u, eps)?, &level_partition(v, eps)?)?;
    let levels = &partition[1..];

    let radius = eps / Rational::from_integer(2);
    let n = shared_iterate(f, u.support().points(), &radius)?;

    let mut per_level = Vec::with_capacity(levels.len());
    for gamma in levels {
        per_level.push(pull_back_cloud(f, u.alpha_cut(gamma)?, v.alpha_cut(gamma)?, &radius, n)?);
    }
    let per_level_log =
        levels.iter().zip(&per_level).map(|(l, k)| LevelEntry { level: l.clone(), size: k.len() }).collect();

    let mut cuts: Vec<Compactum> = Vec::with_capacity(per_level.len());
    let mut acc: Option<Compactum> = None;
    for k in per_level.iter().rev() {
        let next = match acc {
            None => k.clone(),
            Some(a) => a.union(k)?,
        };
        cuts.push(next.clone());
        acc = Some(next);
    }
    cuts.reverse();
    let w = StepFuzzySet::from_cuts(levels.to_vec(), cuts)?;

    let d_source = d_infty(u, &w)?;
    let d_target = d_infty(&iterate_fuzzy(f, &w, n)?, v)?;
    if &d_source >= eps || &d_target >= eps {
        return Err(Error::PostCheckFailed(format!("d_source = {d_source}, d_target = {d_target}, eps = {eps}")));
    }
    Ok(WitnessCertificate { w, n, d_source, d_target, per_level_log })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{characteristic, d_sendo, d_skorokhod};
    use crate::ground::{GroundSpace, Point};
    use crate::rational::q;

    fn chi(x: Rational) -> StepFuzzySet {
        characteristic(&Compactum::from_coords(&GroundSpace::UnitInterval, [x]).unwrap())
    }

    #[test]
    fn singleton_pair() {
        let f = DynMap::tent();
        let eps = q(1, 8);
        let c = fuzzy_witness(&f, &chi(q(1, 2)), &chi(q(1, 4)), &eps).unwrap();
        assert!(c.n >= 1);
        assert!(c.d_source < eps && c.d_target < eps);
        let end = iterate_fuzzy(&f, &c.w, c.n).unwrap();
        assert!(d_skorokhod(&end, &chi(q(1, 4))).unwrap() < eps);
        assert!(d_sendo(&end, &chi(q(1, 4))).unwrap() < eps);
    }

    #[test]
    fn three_level_self_target() {
        let u = StepFuzzySet::from_membership(
            GroundSpace::UnitInterval,
            vec![(Point::Interval(q(0, 1)), q(1, 1)), (Point::Interval(q(1, 3)), q(1, 2)), (Point::Interval(q(1, 1)), q(1, 4))],
        )
        .unwrap();
        let c = fuzzy_witness(&DynMap::tent(), &u, &u, &q(1, 4)).unwrap();
        assert!(c.n >= 1);
        assert_eq!(c.per_level_log.len(), 3);
        assert_eq!(c.d_target, Rational::zero());
    }

    #[test]
    fn rotation_has_no_oracle() {
        let u = StepFuzzySet::from_cuts(
            vec![q(1, 1)],
            vec![Compactum::from_coords(&GroundSpace::Circle, [q(0, 1)]).unwrap()],
        )
        .unwrap();
        assert_eq!(fuzzy_witness(&DynMap::rotation(q(1, 3)), &u, &u, &q(1, 4)), Err(Error::NoMixingOracle));
    }
}
