//! Level-wise and sendograph distances, and the matching entourage tests.

use crate::compacta::{hausdorff_unchecked, k_entourage_contains, Compactum, EntourageRef};
use crate::error::{Error, Result};
use crate::fuzzy::step::StepFuzzySet;
use crate::ground::{GroundSpace, Point};
use crate::rational::Rational;

pub(crate) fn same_space(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<()> {
    if u.space() == v.space() {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

/// Pieces of the common refinement of both level partitions: for each
/// merged level `γ_k`, the cuts of `u` and `v` on `(γ_{k-1}, γ_k]`. The
/// first piece also carries the pair at level zero.
pub(crate) fn merged_pieces<'a>(u: &'a StepFuzzySet, v: &'a StepFuzzySet) -> Vec<(&'a Compactum, &'a Compactum)> {
    let (lu, lv) = (u.levels(), v.levels());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(lu.len() + lv.len());
    while i < lu.len() && j < lv.len() {
        out.push((&u.cuts()[i], &v.cuts()[j]));
        match lu[i].cmp(&lv[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `d_∞(u, v) = sup_α d_H(u_α, v_α)`.
pub fn d_infty(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
    same_space(u, v)?;
    Ok(merged_pieces(u, v)
        .into_iter()
        .map(|(a, b)| hausdorff_unchecked(a, b))
        .max()
        .expect("at least one piece"))
}

fn directed_sendo(u: &[(Point, Rational)], v: &[(Point, Rational)], space: &GroundSpace) -> Rational {
    u.iter()
        .map(|(x, hx)| {
            v.iter()
                .map(|(y, hy)| {
                    let d = space.dist(x, y);
                    let gap = (hx - hy).positive_part();
                    if d > gap {
                        d
                    } else {
                        gap
                    }
                })
                .min()
                .expect("support is non-empty")
        })
        .max()
        .expect("support is non-empty")
}

/// Hausdorff distance between sendographs under the max metric on
/// `X × [0,1]`.
///
/// The distance from a point `(x, a)` to the segment `{y} × [0, h]` is
/// `max(d(x,y), (a - h)⁺)`, which grows with `a`, so only segment tops of
/// the source need to be examined.
pub fn d_sendo(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
    same_space(u, v)?;
    let (gu, gv) = (u.graded_support(), v.graded_support());
    let a = directed_sendo(&gu, &gv, u.space());
    let b = directed_sendo(&gv, &gu, u.space());
    Ok(if a > b { a } else { b })
}

/// `(u, v) ∈ F[V_ε]`: every pair of same-level cuts is in `K[V_ε]`.
pub fn f_entourage_contains(eps: &Rational, u: &StepFuzzySet, v: &StepFuzzySet) -> Result<bool> {
    same_space(u, v)?;
    let ent = EntourageRef::metric(eps.clone())?;
    for (a, b) in merged_pieces(u, v) {
        if !k_entourage_contains(&ent, a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn directed_s_entourage(
    u: &[(Point, Rational)],
    v: &[(Point, Rational)],
    space: &GroundSpace,
    eps_metric: &Rational,
    eps_height: &Rational,
) -> bool {
    u.iter().all(|(x, hx)| v.iter().any(|(y, hy)| &space.dist(x, y) < eps_metric && &(hx - hy) < eps_height))
}

/// `(send(u), send(v)) ∈ K[V_εm × V_εh]`, with separate horizontal and
/// vertical margins, both strict.
pub fn s_entourage_contains(
    eps_metric: &Rational,
    eps_height: &Rational,
    u: &StepFuzzySet,
    v: &StepFuzzySet,
) -> Result<bool> {
    same_space(u, v)?;
    if !eps_metric.is_positive() || !eps_height.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let (gu, gv) = (u.graded_support(), v.graded_support());
    Ok(directed_s_entourage(&gu, &gv, u.space(), eps_metric, eps_height)
        && directed_s_entourage(&gv, &gu, u.space(), eps_metric, eps_height))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::characteristic;
    use crate::ground::{GroundSpace, Point};
    use crate::rational::q;

    fn chi(xs: &[Rational]) -> StepFuzzySet {
        characteristic(&Compactum::from_coords(&GroundSpace::UnitInterval, xs.iter().cloned()).unwrap())
    }

    fn graded(pairs: &[(Rational, Rational)]) -> StepFuzzySet {
        StepFuzzySet::from_membership(
            GroundSpace::UnitInterval,
            pairs.iter().map(|(x, g)| (Point::Interval(x.clone()), g.clone())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn d_infty_examples() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 3))]);
        assert_eq!(d_infty(&u, &u).unwrap(), Rational::zero());
        assert_eq!(d_infty(&chi(&[q(1, 5)]), &chi(&[q(7, 10)])).unwrap(), q(1, 2));
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 2))]);
        assert_eq!(d_infty(&chi(&[q(0, 1)]), &v).unwrap(), q(1, 1));
    }

    #[test]
    fn d_sendo_examples() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 5))]);
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 2))]);
        assert_eq!(d_sendo(&u, &u).unwrap(), Rational::zero());
        assert_eq!(d_sendo(&chi(&[q(1, 5)]), &chi(&[q(7, 10)])).unwrap(), q(1, 2));
        assert_eq!(d_sendo(&u, &v).unwrap(), q(1, 10));
    }

    #[test]
    fn f_entourage_is_strict() {
        let u = chi(&[q(0, 1)]);
        assert!(f_entourage_contains(&q(1, 100), &u, &u).unwrap());
        assert!(!f_entourage_contains(&q(1, 1), &u, &chi(&[q(1, 1)])).unwrap());
        let a = chi(&[q(0, 1), q(1, 1)]);
        let b = chi(&[q(1, 2)]);
        assert_eq!(d_infty(&a, &b).unwrap(), q(1, 2));
        assert!(f_entourage_contains(&(q(1, 2) + q(1, 100)), &a, &b).unwrap());
        assert!(!f_entourage_contains(&q(1, 2), &a, &b).unwrap());
    }

    #[test]
    fn s_entourage_examples() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 5))]);
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 2))]);
        assert!(s_entourage_contains(&q(1, 100), &q(1, 100), &u, &u).unwrap());
        assert!(s_entourage_contains(&q(1, 2), &q(1, 100), &chi(&[q(0, 1)]), &chi(&[q(1, 4)])).unwrap());
        assert!(s_entourage_contains(&q(1, 100), &q(1, 8), &u, &v).unwrap());
        assert!(!s_entourage_contains(&q(1, 100), &q(1, 10), &u, &v).unwrap());
    }

    #[test]
    fn mismatch() {
        let a = chi(&[q(0, 1)]);
        let b = characteristic(&Compactum::from_coords(&GroundSpace::Circle, [q(0, 1)]).unwrap());
        assert_eq!(d_infty(&a, &b), Err(Error::SpaceMismatch));
        assert_eq!(d_sendo(&a, &b), Err(Error::SpaceMismatch));
    }
}
