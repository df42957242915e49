//! Constructive transitivity of the induced map on finite compacta.

use crate::compacta::compactum::{hausdorff_unchecked, Compactum};
use crate::error::{Error, Result};
use crate::ground::{DynMap, Point, Window};
use crate::rational::Rational;

/// Shared iterate for a family of ball centers: the largest cover time of
/// any closed ball of radius `radius`, and at least one.
pub(crate) fn shared_iterate<'a, I>(f: &DynMap, centers: I, radius: &Rational) -> Result<usize>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut n = 1;
    for c in centers {
        let ball = f.ball_window(c, radius)?;
        n = n.max(f.window_cover_time(&ball)? as usize);
    }
    Ok(n)
}

/// For every center `k` and target `l`, a point within `radius` of `k`
/// whose `n`-th image is exactly `l`. Requires `n` to be at least the cover
/// time of every ball.
pub(crate) fn pull_back_cloud(
    f: &DynMap,
    centers: &Compactum,
    targets: &Compactum,
    radius: &Rational,
    n: usize,
) -> Result<Compactum> {
    let mut pts = Vec::with_capacity(centers.len() * targets.len());
    for k in centers.points() {
        let ball: Window = f.ball_window(k, radius)?;
        let orbit = f.window_orbit(&ball, n)?;
        for l in targets.points() {
            pts.push(f.pull_back_into(&orbit, l)?);
        }
    }
    Compactum::new(centers.space().clone(), pts)
}

/// Finds a compactum `A` and an iterate `n >= 1` with `d_H(A, K) < eps`
/// and `d_H(f^n(A), L) < eps`.
///
/// Every point of `A` sits in a closed `eps/2` ball around a point of `K`
/// and is an exact `n`-fold preimage of a point of `L`; one point is built
/// for each pair `(k, l)`. The bounds are re-checked before returning.
pub fn compact_witness(f: &DynMap, k: &Compactum, l: &Compactum, eps: &Rational) -> Result<(Compactum, usize)> {
    if !f.has_mixing_oracle() {
        return Err(Error::NoMixingOracle);
    }
    if !eps.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    k.same_space(l)?;
    if f.space() != k.space() {
        return Err(Error::SpaceMismatch);
    }
    let radius = eps / Rational::from_integer(2);
    let n = shared_iterate(f, k.points(), &radius)?;
    let a = pull_back_cloud(f, k, l, &radius, n)?;

    let d_source = hausdorff_unchecked(&a, k);
    let d_target = hausdorff_unchecked(&a.iterate_image(f, n)?, l);
    if &d_source >= eps || &d_target >= eps {
        return Err(Error::PostCheckFailed(format!("d_source = {d_source}, d_target = {d_target}, eps = {eps}")));
    }
    Ok((a, n))
}
