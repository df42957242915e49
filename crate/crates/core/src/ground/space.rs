use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of a ground space, tagged with the kind of space it lives in.
///
/// Circle coordinates are kept normalized to `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Interval(Rational),
    Circle(Rational),
    Element(usize),
}

impl Point {
    /// The scalar coordinate of an interval or circle point.
    pub fn coord(&self) -> Option<&Rational> {
        match self {
            Point::Interval(x) | Point::Circle(x) => Some(x),
            Point::Element(_) => None,
        }
    }

    pub fn element(&self) -> Option<usize> {
        match self {
            Point::Element(i) => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Interval(x) | Point::Circle(x) => write!(f, "{x}"),
            Point::Element(i) => write!(f, "{i}"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Interval(x) => write!(f, "I({x})"),
            Point::Circle(x) => write!(f, "S({x})"),
            Point::Element(i) => write!(f, "e{i}"),
        }
    }
}

/// Symmetric distance table on `{0, .., n-1}` satisfying the metric axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteMetric {
    dist: Vec<Vec<Rational>>,
}

impl FiniteMetric {
    pub fn new(dist: Vec<Vec<Rational>>) -> Result<Self> {
        let n = dist.len();
        if n == 0 {
            return Err(Error::InvalidSpace("finite space needs at least one element".into()));
        }
        for (i, row) in dist.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSpace(format!("row {i} has length {}, expected {n}", row.len())));
            }
        }
        for i in 0..n {
            if !dist[i][i].is_zero() {
                return Err(Error::InvalidSpace(format!("d({i},{i}) is not zero")));
            }
            for j in 0..n {
                if dist[i][j] != dist[j][i] {
                    return Err(Error::InvalidSpace(format!("d({i},{j}) != d({j},{i})")));
                }
                if i != j && !dist[i][j].is_positive() {
                    return Err(Error::InvalidSpace(format!("d({i},{j}) must be positive")));
                }
                for k in 0..n {
                    if dist[i][k] > &dist[i][j] + &dist[j][k] {
                        return Err(Error::InvalidSpace(format!("triangle inequality fails for ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(FiniteMetric { dist })
    }

    /// The discrete metric: every pair of distinct points is at distance one.
    pub fn discrete(n: usize) -> Result<Self> {
        let dist = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::zero() } else { Rational::one() }).collect())
            .collect();
        FiniteMetric::new(dist)
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.dist[i][j]
    }

    pub fn table(&self) -> &[Vec<Rational>] {
        &self.dist
    }
}

/// A metric ground space with exactly computable distances.
///
/// The circle has circumference one and carries the arc-length metric
/// `min(|x - y|, 1 - |x - y|)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroundSpace {
    UnitInterval,
    Circle,
    Finite(Arc<FiniteMetric>),
}

impl GroundSpace {
    pub fn finite(metric: FiniteMetric) -> Self {
        GroundSpace::Finite(Arc::new(metric))
    }

    /// Wraps a scalar as a point of this space, normalizing circle values.
    pub fn point(&self, x: Rational) -> Result<Point> {
        match self {
            GroundSpace::UnitInterval => {
                if x.in_unit_interval() {
                    Ok(Point::Interval(x))
                } else {
                    Err(Error::PointOutOfSpace(x.to_string()))
                }
            }
            GroundSpace::Circle => Ok(Point::Circle(x.fract_pos())),
            GroundSpace::Finite(_) => Err(Error::PointOutOfSpace(format!("{x} is not an element index"))),
        }
    }

    pub fn element(&self, i: usize) -> Result<Point> {
        match self {
            GroundSpace::Finite(m) if i < m.len() => Ok(Point::Element(i)),
            _ => Err(Error::PointOutOfSpace(format!("element {i}"))),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match (self, p) {
            (GroundSpace::UnitInterval, Point::Interval(x)) => x.in_unit_interval(),
            (GroundSpace::Circle, Point::Circle(x)) => !x.is_negative() && x < &Rational::one(),
            (GroundSpace::Finite(m), Point::Element(i)) => *i < m.len(),
            _ => false,
        }
    }

    pub fn check(&self, p: &Point) -> Result<()> {
        if self.contains(p) {
            return Ok(());
        }
        let kind_matches = matches!(
            (self, p),
            (GroundSpace::UnitInterval, Point::Interval(_))
                | (GroundSpace::Circle, Point::Circle(_))
                | (GroundSpace::Finite(_), Point::Element(_))
        );
        if kind_matches {
            Err(Error::PointOutOfSpace(p.to_string()))
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Exact distance between two points of this space.
    pub fn distance(&self, a: &Point, b: &Point) -> Result<Rational> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.dist(a, b))
    }

    /// Distance without membership checks. Callers guarantee both points
    /// belong to `self`.
    pub(crate) fn dist(&self, a: &Point, b: &Point) -> Rational {
        match (self, a, b) {
            (GroundSpace::UnitInterval, Point::Interval(x), Point::Interval(y)) => (x - y).abs(),
            (GroundSpace::Circle, Point::Circle(x), Point::Circle(y)) => {
                let d = (x - y).abs();
                let wrap = Rational::one() - &d;
                if wrap < d {
                    wrap
                } else {
                    d
                }
            }
            (GroundSpace::Finite(m), Point::Element(i), Point::Element(j)) => m.get(*i, *j).clone(),
            _ => panic!("dist called with points of a different space"),
        }
    }

    /// Short name used in files: `interval`, `circle` or `finite`.
    pub fn kind_name(&self) -> &'static str {
        match self {
            GroundSpace::UnitInterval => "interval",
            GroundSpace::Circle => "circle",
            GroundSpace::Finite(_) => "finite",
        }
    }
}

/// Exact distance between `a` and `b` in `space`.
pub fn distance(space: &GroundSpace, a: &Point, b: &Point) -> Result<Rational> {
    space.distance(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn interval_distances() {
        let s = GroundSpace::UnitInterval;
        let p = |x| s.point(x).unwrap();
        assert_eq!(s.distance(&p(q(0, 1)), &p(q(0, 1))).unwrap(), Rational::zero());
        assert_eq!(s.distance(&p(q(1, 4)), &p(q(3, 4))).unwrap(), q(1, 2));
    }

    #[test]
    fn circle_uses_short_arc() {
        let s = GroundSpace::Circle;
        let a = s.point(q(1, 8)).unwrap();
        let b = s.point(q(7, 8)).unwrap();
        assert_eq!(s.distance(&a, &b).unwrap(), q(1, 4));
        assert_eq!(s.point(q(5, 4)).unwrap(), Point::Circle(q(1, 4)));
        assert_eq!(s.point(q(1, 1)).unwrap(), Point::Circle(Rational::zero()));
    }

    #[test]
    fn mixed_points_are_rejected() {
        let s = GroundSpace::UnitInterval;
        let a = Point::Interval(q(1, 2));
        let b = Point::Circle(q(1, 2));
        assert_eq!(s.distance(&a, &b), Err(Error::SpaceMismatch));
        assert!(matches!(s.point(q(3, 2)), Err(Error::PointOutOfSpace(_))));
    }

    #[test]
    fn finite_metric_validation() {
        let r = |a, b| q(a, b);
        assert!(FiniteMetric::new(vec![vec![r(0, 1), r(1, 1)], vec![r(1, 1), r(0, 1)]]).is_ok());
        assert!(FiniteMetric::new(vec![vec![r(0, 1), r(1, 1)], vec![r(2, 1), r(0, 1)]]).is_err());
        let bad_triangle = vec![
            vec![r(0, 1), r(1, 1), r(3, 1)],
            vec![r(1, 1), r(0, 1), r(1, 1)],
            vec![r(3, 1), r(1, 1), r(0, 1)],
        ];
        assert!(FiniteMetric::new(bad_triangle).is_err());
        assert!(FiniteMetric::new(vec![vec![r(0, 1), r(0, 1)], vec![r(0, 1), r(0, 1)]]).is_err());
    }
}
