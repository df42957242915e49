//! Seeded generators for property checks and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::compacta::Compactum;
use crate::fuzzy::{StepFuzzySet, TimeWarp};
use crate::ground::{DynMap, FiniteMetric, GroundSpace, Point};
use crate::rational::Rational;

/// Coordinates are drawn from multiples of `1/GRID`.
pub const GRID: i64 = 16;

/// A random point; interval and circle coordinates lie on the `1/GRID` grid.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, space: &GroundSpace) -> Point {
    match space {
        GroundSpace::UnitInterval => Point::Interval(Rational::new(rng.gen_range(0..=GRID), GRID)),
        GroundSpace::Circle => Point::Circle(Rational::new(rng.gen_range(0..GRID), GRID)),
        GroundSpace::Finite(m) => Point::Element(rng.gen_range(0..m.len())),
    }
}

/// A compactum with between one and `max_points` points.
pub fn random_compactum<R: Rng + ?Sized>(rng: &mut R, space: &GroundSpace, max_points: usize) -> Compactum {
    let k = rng.gen_range(1..=max_points.max(1));
    let pts = (0..k).map(|_| random_point(rng, space)).collect();
    Compactum::new(space.clone(), pts).expect("generated points lie in the space")
}

/// A level in `(0, 1)` from the grid `{1/12, .., 11/12}`.
fn random_level<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..12), 12)
}

/// A step fuzzy set with at most `max_levels` levels and `max_points`
/// support points.
pub fn random_fuzzy_set<R: Rng + ?Sized>(
    rng: &mut R,
    space: &GroundSpace,
    max_levels: usize,
    max_points: usize,
) -> StepFuzzySet {
    let mut levels: Vec<Rational> = (1..rng.gen_range(1..=max_levels.max(1))).map(|_| random_level(rng)).collect();
    levels.push(Rational::one());
    levels.sort();
    levels.dedup();
    let support = random_compactum(rng, space, max_points);
    let mut grades: Vec<(Point, Rational)> =
        support.points().iter().map(|p| (p.clone(), levels.choose(rng).expect("non-empty").clone())).collect();
    let top = rng.gen_range(0..grades.len());
    grades[top].1 = Rational::one();
    StepFuzzySet::from_membership(space.clone(), grades).expect("generated grades are valid")
}

/// A warp with up to `max_knots` interior knots on the `1/24` grid.
pub fn random_warp<R: Rng + ?Sized>(rng: &mut R, max_knots: usize) -> TimeWarp {
    let k = rng.gen_range(0..=max_knots);
    let mut s: Vec<i64> = (0..k).map(|_| rng.gen_range(1..24)).collect();
    let mut t: Vec<i64> = (0..k).map(|_| rng.gen_range(1..24)).collect();
    for v in [&mut s, &mut t] {
        v.sort_unstable();
        v.dedup();
    }
    let m = s.len().min(t.len());
    TimeWarp::through((0..m).map(|i| (Rational::new(s[i], 24), Rational::new(t[i], 24))))
        .expect("sorted distinct knots form a warp")
}

/// A finite metric space with distances in `[1, 2]` off the diagonal, which
/// always satisfy the triangle inequality.
pub fn random_finite_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GroundSpace {
    let mut d = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = Rational::new(rng.gen_range(4..=8), 4);
            d[i][j] = x.clone();
            d[j][i] = x;
        }
    }
    GroundSpace::finite(FiniteMetric::new(d).expect("distances in [1,2] form a metric"))
}

/// A random self-map of a finite space.
pub fn random_table_map<R: Rng + ?Sized>(rng: &mut R, space: &GroundSpace) -> DynMap {
    let n = match space {
        GroundSpace::Finite(m) => m.len(),
        _ => panic!("table maps need a finite space"),
    };
    let targets = (0..n).map(|_| rng.gen_range(0..n)).collect();
    DynMap::finite_table(space, targets).expect("targets are in range")
}
