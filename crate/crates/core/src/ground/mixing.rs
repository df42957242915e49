//! Constructive mixing oracle for expanding maps.
//!
//! For the tent map on `[0,1]` and the doubling map on the circle every
//! non-degenerate interval is blown up to the whole space after finitely many
//! steps. Images of intervals stay intervals (arcs, on the circle), so the
//! cover time is found by exact iteration, and exact preimages inside a
//! prescribed window are found by walking the window's forward images
//! backwards.

use crate::error::{Error, Result};
use crate::ground::map::{DynMap, MapKind};
use crate::ground::space::Point;
use crate::rational::Rational;

/// Which inverse branch of the tent map to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Left,
    Right,
}

/// `y/2` for the left branch, `1 - y/2` for the right one.
pub fn tent_inverse_branch(y: &Rational, branch: Branch) -> Rational {
    let half = y / Rational::from_integer(2);
    match branch {
        Branch::Left => half,
        Branch::Right => Rational::one() - half,
    }
}

/// A closed interval `[start, start + len]` of `[0,1]`, or a closed arc of
/// the circle starting at `start` and running counter-clockwise for `len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: Rational,
    pub len: Rational,
}

impl Window {
    pub fn interval(lo: Rational, hi: Rational) -> Self {
        let len = &hi - &lo;
        Window { start: lo, len }
    }

    pub fn end(&self) -> Rational {
        &self.start + &self.len
    }
}

impl DynMap {
    fn oracle_kind(&self) -> Result<bool> {
        match self.kind() {
            MapKind::Tent => Ok(true),
            MapKind::Doubling => Ok(false),
            _ => Err(Error::NoMixingOracle),
        }
    }

    /// Whether `w` is the whole space.
    pub(crate) fn window_is_full(&self, w: &Window) -> bool {
        match self.kind() {
            MapKind::Doubling => w.len >= Rational::one(),
            _ => w.start.is_zero() && w.len == Rational::one(),
        }
    }

    /// Exact image of a window under one application of the map.
    pub(crate) fn window_image(&self, w: &Window) -> Result<Window> {
        let two = Rational::from_integer(2);
        if self.oracle_kind()? {
            let (a, b) = (w.start.clone(), w.end());
            let half = Rational::half();
            let (lo, hi) = if b <= half {
                (&a * &two, &b * &two)
            } else if a >= half {
                ((Rational::one() - &b) * &two, (Rational::one() - &a) * &two)
            } else {
                let l = &a * &two;
                let r = (Rational::one() - &b) * &two;
                (if l < r { l } else { r }, Rational::one())
            };
            Ok(Window::interval(lo, hi))
        } else {
            let len = &w.len * &two;
            let len = if len > Rational::one() { Rational::one() } else { len };
            Ok(Window { start: (&w.start * &two).fract_pos(), len })
        }
    }

    pub(crate) fn window_contains(&self, w: &Window, p: &Point) -> bool {
        match (self.kind(), p) {
            (MapKind::Doubling, Point::Circle(x)) => w.len >= Rational::one() || (x - &w.start).fract_pos() <= w.len,
            (_, Point::Interval(x)) => x >= &w.start && x <= &w.end(),
            _ => false,
        }
    }

    /// `outer` contains `inner` as a set.
    pub(crate) fn window_includes(&self, outer: &Window, inner: &Window) -> bool {
        match self.kind() {
            MapKind::Doubling => {
                outer.len >= Rational::one()
                    || (inner.len <= outer.len && {
                        let offset = (&inner.start - &outer.start).fract_pos();
                        &offset + &inner.len <= outer.len
                    })
            }
            _ => inner.start >= outer.start && inner.end() <= outer.end(),
        }
    }

    /// The closed ball of radius `r` around `center`, intersected with the space.
    pub(crate) fn ball_window(&self, center: &Point, r: &Rational) -> Result<Window> {
        self.oracle_kind()?;
        match (self.kind(), center) {
            (MapKind::Tent, Point::Interval(x)) => {
                let lo = (x - r).clamp_to(&Rational::zero(), &Rational::one());
                let hi = (x + r).clamp_to(&Rational::zero(), &Rational::one());
                Ok(Window::interval(lo, hi))
            }
            (MapKind::Doubling, Point::Circle(x)) => {
                let len = r * Rational::from_integer(2);
                if len >= Rational::one() {
                    Ok(Window { start: Rational::zero(), len: Rational::one() })
                } else {
                    Ok(Window { start: (x - r).fract_pos(), len })
                }
            }
            _ => Err(Error::SpaceMismatch),
        }
    }

    /// Smallest `n` with `f^n(w)` equal to the whole space.
    pub(crate) fn window_cover_time(&self, w: &Window) -> Result<u32> {
        if !w.len.is_positive() {
            return Err(Error::EmptyInterval);
        }
        let mut cur = w.clone();
        let mut n = 0;
        while !self.window_is_full(&cur) {
            cur = self.window_image(&cur)?;
            n += 1;
        }
        Ok(n)
    }

    /// Smallest `n` with `f^n([lo, hi])` the whole space (an arc from `lo` to
    /// `hi` on the circle).
    pub fn interval_cover_time(&self, lo: &Rational, hi: &Rational) -> Result<u32> {
        self.oracle_kind()?;
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        if !lo.in_unit_interval() || !hi.in_unit_interval() {
            return Err(Error::LevelOutOfRange(format!("[{lo},{hi}]")));
        }
        self.window_cover_time(&Window::interval(lo.clone(), hi.clone()))
    }

    /// Forward images `w, f(w), .., f^n(w)`.
    pub(crate) fn window_orbit(&self, w: &Window, n: usize) -> Result<Vec<Window>> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(w.clone());
        for _ in 0..n {
            let next = self.window_image(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// A point `x` of `windows[0]` with `f^n(x) = y`, where `windows` is the
    /// forward orbit of length `n + 1` and `y` lies in `windows[n]`.
    ///
    /// Walks back one step at a time, keeping the preimage that stays in the
    /// corresponding window; the left (smaller) branch wins ties.
    pub(crate) fn pull_back_into(&self, windows: &[Window], y: &Point) -> Result<Point> {
        let last = windows.last().ok_or(Error::EmptyInterval)?;
        if !self.window_contains(last, y) {
            return Err(Error::PostCheckFailed(format!("target {y} not covered by the final window")));
        }
        let mut cur = y.clone();
        for w in windows[..windows.len() - 1].iter().rev() {
            let candidates = self.inverse_branches(&cur)?;
            cur = candidates
                .into_iter()
                .find(|c| self.window_contains(w, c))
                .ok_or_else(|| Error::PostCheckFailed(format!("no preimage of {cur} inside the window")))?;
        }
        Ok(cur)
    }

    /// Both inverse branches, left first.
    fn inverse_branches(&self, y: &Point) -> Result<Vec<Point>> {
        match (self.kind(), y) {
            (MapKind::Tent, Point::Interval(y)) => Ok(vec![
                Point::Interval(tent_inverse_branch(y, Branch::Left)),
                Point::Interval(tent_inverse_branch(y, Branch::Right)),
            ]),
            (MapKind::Doubling, Point::Circle(y)) => {
                let half = y / Rational::from_integer(2);
                let other = &half + Rational::half();
                Ok(vec![Point::Circle(half), Point::Circle(other)])
            }
            (MapKind::Tent | MapKind::Doubling, _) => Err(Error::SpaceMismatch),
            _ => Err(Error::NoMixingOracle),
        }
    }
}

/// Smallest `n` with `f^n([lo, hi]) = [0, 1]`.
pub fn interval_cover_time(f: &DynMap, lo: &Rational, hi: &Rational) -> Result<u32> {
    f.interval_cover_time(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    #[test]
    fn inverse_branch_values() {
        assert_eq!(tent_inverse_branch(&q(1, 1), Branch::Left), q(1, 2));
        assert_eq!(tent_inverse_branch(&q(1, 2), Branch::Right), q(3, 4));
        assert_eq!(tent_inverse_branch(&q(0, 1), Branch::Right), q(1, 1));
    }

    #[test]
    fn cover_time_examples() {
        let f = DynMap::tent();
        assert_eq!(f.interval_cover_time(&q(0, 1), &q(1, 1)).unwrap(), 0);
        assert_eq!(f.interval_cover_time(&q(0, 1), &q(1, 2)).unwrap(), 1);
        assert_eq!(f.interval_cover_time(&q(3, 8), &q(1, 2)).unwrap(), 3);
    }

    #[test]
    fn cover_time_errors() {
        let f = DynMap::tent();
        assert_eq!(f.interval_cover_time(&q(1, 2), &q(1, 2)), Err(Error::EmptyInterval));
        assert_eq!(
            DynMap::rotation(q(1, 3)).interval_cover_time(&q(0, 1), &q(1, 2)),
            Err(Error::NoMixingOracle)
        );
    }

    #[test]
    fn doubling_cover_time_is_log_length() {
        let f = DynMap::doubling();
        assert_eq!(f.interval_cover_time(&q(0, 1), &q(1, 1)).unwrap(), 0);
        assert_eq!(f.interval_cover_time(&q(1, 4), &q(3, 4)).unwrap(), 1);
        assert_eq!(f.interval_cover_time(&q(1, 3), &(&q(1, 3) + q(1, 16))).unwrap(), 4);
        assert_eq!(f.interval_cover_time(&q(1, 3), &(&q(1, 3) + q(1, 17))).unwrap(), 5);
    }

    #[test]
    fn pull_back_lands_in_window() {
        let f = DynMap::tent();
        let w = Window::interval(q(3, 8), q(1, 2));
        let orbit = f.window_orbit(&w, 3).unwrap();
        for y in [q(0, 1), q(1, 4), q(2, 3), q(1, 1)] {
            let x = f.pull_back_into(&orbit, &Point::Interval(y.clone())).unwrap();
            assert!(f.window_contains(&w, &x));
            assert_eq!(f.iterate(&x, 3).unwrap(), Point::Interval(y));
        }
    }

    fn unit_rational() -> impl Strategy<Value = Rational> {
        (0i64..=64, 1i64..=64).prop_map(|(a, b)| if a > b { q(b, a) } else { q(a, b) })
    }

    proptest! {
        #[test]
        fn inverse_branches_land_on_the_right_half(y in unit_rational()) {
            let l = tent_inverse_branch(&y, Branch::Left);
            let r = tent_inverse_branch(&y, Branch::Right);
            prop_assert!(l >= Rational::zero() && l <= Rational::half());
            prop_assert!(r >= Rational::half() && r <= Rational::one());
            let f = DynMap::tent();
            prop_assert_eq!(f.apply(&Point::Interval(l)).unwrap(), Point::Interval(y.clone()));
            prop_assert_eq!(f.apply(&Point::Interval(r)).unwrap(), Point::Interval(y));
        }

        #[test]
        fn cover_time_is_antitone(a in unit_rational(), b in unit_rational(), c in unit_rational(), d in unit_rational()) {
            let mut pts = [a, b, c, d];
            pts.sort();
            let [c, a, b, d] = pts;
            prop_assume!(a < b);
            let f = DynMap::tent();
            let inner = f.interval_cover_time(&a, &b).unwrap();
            let outer = f.interval_cover_time(&c, &d).unwrap();
            prop_assert!(inner >= outer);
        }
    }
}
