use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ground::space::{GroundSpace, Point};
use crate::rational::Rational;

/// The kinds of self-maps the crate can evaluate exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapKind {
    /// `2x` on `[0, 1/2]`, `2(1 - x)` on `[1/2, 1]`.
    Tent,
    /// `x -> 2x mod 1` on the circle.
    Doubling,
    /// `x -> x + theta mod 1` on the circle.
    Rotation(Rational),
    /// Continuous piecewise-linear self-map of `[0, 1]` through the
    /// points `(breakpoints[i], values[i])`.
    PiecewiseLinear { breakpoints: Vec<Rational>, values: Vec<Rational> },
    /// `i -> targets[i]` on a finite space.
    FiniteTable { targets: Vec<usize> },
}

/// A continuous self-map of a ground space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynMap {
    kind: MapKind,
    space: GroundSpace,
    is_isometry: bool,
    has_mixing_oracle: bool,
}

impl DynMap {
    pub fn tent() -> Self {
        DynMap { kind: MapKind::Tent, space: GroundSpace::UnitInterval, is_isometry: false, has_mixing_oracle: true }
    }

    pub fn doubling() -> Self {
        DynMap { kind: MapKind::Doubling, space: GroundSpace::Circle, is_isometry: false, has_mixing_oracle: true }
    }

    pub fn rotation(theta: Rational) -> Self {
        DynMap {
            kind: MapKind::Rotation(theta.fract_pos()),
            space: GroundSpace::Circle,
            is_isometry: true,
            has_mixing_oracle: false,
        }
    }

    /// Breakpoints must run from 0 to 1 strictly increasing; values must lie
    /// in `[0, 1]` with no two adjacent values equal, so that every segment
    /// can be inverted.
    pub fn piecewise_linear(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.len() < 2 || breakpoints.len() != values.len() {
            return Err(Error::InvalidMap("need at least two breakpoints and one value per breakpoint".into()));
        }
        if !breakpoints[0].is_zero() || breakpoints[breakpoints.len() - 1] != Rational::one() {
            return Err(Error::InvalidMap("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMap("breakpoints must be strictly increasing".into()));
        }
        if values.iter().any(|v| !v.in_unit_interval()) {
            return Err(Error::InvalidMap("values must lie in [0,1]".into()));
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMap("constant segments have no finite preimage".into()));
        }
        let is_identity = breakpoints == values;
        Ok(DynMap {
            kind: MapKind::PiecewiseLinear { breakpoints, values },
            space: GroundSpace::UnitInterval,
            is_isometry: is_identity,
            has_mixing_oracle: false,
        })
    }

    pub fn identity_interval() -> Self {
        DynMap::piecewise_linear(vec![Rational::zero(), Rational::one()], vec![Rational::zero(), Rational::one()])
            .expect("identity is a valid piecewise-linear map")
    }

    pub fn finite_table(space: &GroundSpace, targets: Vec<usize>) -> Result<Self> {
        let GroundSpace::Finite(metric) = space else {
            return Err(Error::InvalidMap("table maps need a finite space".into()));
        };
        if targets.len() != metric.len() {
            return Err(Error::InvalidMap(format!("table has {} entries for {} elements", targets.len(), metric.len())));
        }
        if let Some(t) = targets.iter().find(|&&t| t >= metric.len()) {
            return Err(Error::InvalidMap(format!("target {t} outside the space")));
        }
        let n = targets.len();
        let is_isometry =
            (0..n).all(|i| (0..n).all(|j| metric.get(targets[i], targets[j]) == metric.get(i, j)));
        Ok(DynMap { kind: MapKind::FiniteTable { targets }, space: space.clone(), is_isometry, has_mixing_oracle: false })
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn space(&self) -> &GroundSpace {
        &self.space
    }

    pub fn is_isometry(&self) -> bool {
        self.is_isometry
    }

    pub fn has_mixing_oracle(&self) -> bool {
        self.has_mixing_oracle
    }

    /// Exact image of `x`.
    pub fn apply(&self, x: &Point) -> Result<Point> {
        self.space.check(x)?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Point) -> Point {
        match (&self.kind, x) {
            (MapKind::Tent, Point::Interval(x)) => Point::Interval(tent(x)),
            (MapKind::Doubling, Point::Circle(x)) => Point::Circle((x + x).fract_pos()),
            (MapKind::Rotation(theta), Point::Circle(x)) => Point::Circle((x + theta).fract_pos()),
            (MapKind::PiecewiseLinear { breakpoints, values }, Point::Interval(x)) => {
                Point::Interval(pl_eval(breakpoints, values, x))
            }
            (MapKind::FiniteTable { targets }, Point::Element(i)) => Point::Element(targets[*i]),
            _ => unreachable!("point checked against the map's space"),
        }
    }

    /// `f^n(x)`.
    pub fn iterate(&self, x: &Point, n: usize) -> Result<Point> {
        self.space.check(x)?;
        let mut y = x.clone();
        for _ in 0..n {
            y = self.apply_unchecked(&y);
        }
        Ok(y)
    }

    /// The full preimage `f^{-1}(y)`, sorted and deduplicated. May be empty.
    pub fn preimage_points(&self, y: &Point) -> Result<Vec<Point>> {
        self.space.check(y)?;
        let mut out = match (&self.kind, y) {
            (MapKind::Tent, Point::Interval(y)) => {
                let half = y / Rational::from_integer(2);
                vec![Point::Interval(Rational::one() - &half), Point::Interval(half)]
            }
            (MapKind::Doubling, Point::Circle(y)) => {
                let half = y / Rational::from_integer(2);
                let other = &half + Rational::half();
                vec![Point::Circle(half), Point::Circle(other)]
            }
            (MapKind::Rotation(theta), Point::Circle(y)) => vec![Point::Circle((y - theta).fract_pos())],
            (MapKind::PiecewiseLinear { breakpoints, values }, Point::Interval(y)) => {
                pl_preimages(breakpoints, values, y).into_iter().map(Point::Interval).collect()
            }
            (MapKind::FiniteTable { targets }, Point::Element(j)) => {
                targets.iter().enumerate().filter(|(_, t)| *t == j).map(|(i, _)| Point::Element(i)).collect()
            }
            _ => unreachable!("point checked against the map's space"),
        };
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// The `n`-fold composition as a table, for finite maps only.
    pub fn compose_power(&self, n: usize) -> Result<DynMap> {
        let MapKind::FiniteTable { targets } = &self.kind else {
            return Err(Error::InvalidMap("only table maps can be composed into a table".into()));
        };
        let composed = (0..targets.len())
            .map(|i| {
                let mut j = i;
                for _ in 0..n {
                    j = targets[j];
                }
                j
            })
            .collect();
        DynMap::finite_table(&self.space, composed)
    }
}

/// Applies `f` to `x`.
pub fn apply_map(f: &DynMap, x: &Point) -> Result<Point> {
    f.apply(x)
}

/// The full preimage of `y` under `f`.
pub fn preimage_points(f: &DynMap, y: &Point) -> Result<Vec<Point>> {
    f.preimage_points(y)
}

pub(crate) fn tent(x: &Rational) -> Rational {
    let two = Rational::from_integer(2);
    if x <= &Rational::half() {
        x * &two
    } else {
        (Rational::one() - x) * two
    }
}

fn pl_eval(bp: &[Rational], vals: &[Rational], x: &Rational) -> Rational {
    let i = match bp.iter().position(|b| b >= x) {
        Some(0) | None => return vals[0].clone(),
        Some(i) => i,
    };
    if &bp[i] == x {
        return vals[i].clone();
    }
    let (x0, x1, y0, y1) = (&bp[i - 1], &bp[i], &vals[i - 1], &vals[i]);
    y0 + (x - x0) * (y1 - y0) / (x1 - x0)
}

fn pl_preimages(bp: &[Rational], vals: &[Rational], y: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 0..bp.len() - 1 {
        let (x0, x1, y0, y1) = (&bp[i], &bp[i + 1], &vals[i], &vals[i + 1]);
        let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
        if y < lo || y > hi {
            continue;
        }
        out.push(x0 + (y - y0) * (x1 - x0) / (y1 - y0));
    }
    out
}

/// Textual map descriptors used by the CLI and config files:
/// `tent`, `doubling`, `rotation:THETA`, `pl:B0,B1,..:V0,V1,..`, and
/// `table:T0,T1,..` (the latter needs a finite space to bind to).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapSpec {
    Tent,
    Doubling,
    Rotation(Rational),
    PiecewiseLinear(Vec<Rational>, Vec<Rational>),
    Table(Vec<usize>),
}

impl MapSpec {
    /// Binds the descriptor to a space, building the map.
    pub fn build(&self, space: &GroundSpace) -> Result<DynMap> {
        let map = match self {
            MapSpec::Tent => DynMap::tent(),
            MapSpec::Doubling => DynMap::doubling(),
            MapSpec::Rotation(t) => DynMap::rotation(t.clone()),
            MapSpec::PiecewiseLinear(b, v) => DynMap::piecewise_linear(b.clone(), v.clone())?,
            MapSpec::Table(t) => DynMap::finite_table(space, t.clone())?,
        };
        if map.space() != space {
            return Err(Error::SpaceMismatch);
        }
        Ok(map)
    }
}

impl FromStr for MapSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rationals = |list: &str| -> Result<Vec<Rational>> {
            list.split(',').map(|x| x.parse::<Rational>().map_err(Error::from)).collect()
        };
        match s.split_once(':') {
            None if s == "tent" => Ok(MapSpec::Tent),
            None if s == "doubling" => Ok(MapSpec::Doubling),
            Some(("rotation", theta)) => Ok(MapSpec::Rotation(theta.parse()?)),
            Some(("pl", rest)) => {
                let (b, v) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("pl:BREAKPOINTS:VALUES expected".into()))?;
                Ok(MapSpec::PiecewiseLinear(rationals(b)?, rationals(v)?))
            }
            Some(("table", t)) => t
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("table entry {x:?}: {e}"))))
                .collect::<Result<Vec<_>>>()
                .map(MapSpec::Table),
            _ => Err(Error::Parse(format!("unknown map descriptor {s:?}"))),
        }
    }
}

impl fmt::Display for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            MapSpec::Tent => write!(f, "tent"),
            MapSpec::Doubling => write!(f, "doubling"),
            MapSpec::Rotation(t) => write!(f, "rotation:{t}"),
            MapSpec::PiecewiseLinear(b, v) => write!(f, "pl:{}:{}", join(b), join(v)),
            MapSpec::Table(t) => {
                write!(f, "table:{}", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::space::FiniteMetric;
    use crate::rational::q;

    fn ip(x: Rational) -> Point {
        Point::Interval(x)
    }

    #[test]
    fn tent_values() {
        let f = DynMap::tent();
        assert_eq!(f.apply(&ip(q(1, 2))).unwrap(), ip(q(1, 1)));
        assert_eq!(f.apply(&ip(q(3, 4))).unwrap(), ip(q(1, 2)));
        assert_eq!(f.apply(&ip(q(0, 1))).unwrap(), ip(q(0, 1)));
    }

    #[test]
    fn rotation_wraps() {
        let f = DynMap::rotation(q(1, 3));
        assert_eq!(f.apply(&Point::Circle(q(5, 6))).unwrap(), Point::Circle(q(1, 6)));
        assert!(f.is_isometry());
        assert!(!f.has_mixing_oracle());
    }

    #[test]
    fn tent_preimages() {
        let f = DynMap::tent();
        assert_eq!(f.preimage_points(&ip(q(1, 1))).unwrap(), vec![ip(q(1, 2))]);
        assert_eq!(f.preimage_points(&ip(q(1, 2))).unwrap(), vec![ip(q(1, 4)), ip(q(3, 4))]);
        assert_eq!(f.preimage_points(&ip(q(0, 1))).unwrap(), vec![ip(q(0, 1)), ip(q(1, 1))]);
    }

    #[test]
    fn piecewise_linear_eval_and_inverse() {
        // zig-zag 0 -> 1 -> 1/4 -> 1 on thirds
        let f = DynMap::piecewise_linear(
            vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)],
            vec![q(0, 1), q(1, 1), q(1, 4), q(1, 1)],
        )
        .unwrap();
        assert_eq!(f.apply(&ip(q(1, 6))).unwrap(), ip(q(1, 2)));
        assert_eq!(f.apply(&ip(q(1, 2))).unwrap(), ip(q(5, 8)));
        let pre = f.preimage_points(&ip(q(1, 2))).unwrap();
        assert_eq!(pre.len(), 3);
        for x in pre {
            assert_eq!(f.apply(&x).unwrap(), ip(q(1, 2)));
        }
        assert!(f.preimage_points(&ip(q(1, 8))).unwrap().len() == 1);
        assert!(DynMap::piecewise_linear(vec![q(0, 1), q(1, 1)], vec![q(1, 2), q(1, 2)]).is_err());
        assert!(DynMap::piecewise_linear(vec![q(0, 1), q(1, 2)], vec![q(0, 1), q(1, 1)]).is_err());
    }

    #[test]
    fn table_maps() {
        let space = GroundSpace::finite(FiniteMetric::discrete(3).unwrap());
        let f = DynMap::finite_table(&space, vec![1, 1, 0]).unwrap();
        assert!(!f.is_isometry());
        assert_eq!(f.preimage_points(&Point::Element(1)).unwrap(), vec![Point::Element(0), Point::Element(1)]);
        assert!(f.preimage_points(&Point::Element(2)).unwrap().is_empty());
        let perm = DynMap::finite_table(&space, vec![2, 0, 1]).unwrap();
        assert!(perm.is_isometry());
        assert_eq!(perm.compose_power(3).unwrap(), DynMap::finite_table(&space, vec![0, 1, 2]).unwrap());
        assert!(DynMap::finite_table(&space, vec![0, 3, 1]).is_err());
    }

    #[test]
    fn mismatched_point_is_an_error() {
        assert_eq!(DynMap::tent().apply(&Point::Circle(q(1, 2))), Err(Error::SpaceMismatch));
    }

    #[test]
    fn map_specs_parse() {
        assert_eq!("tent".parse::<MapSpec>().unwrap(), MapSpec::Tent);
        assert_eq!("rotation:1/3".parse::<MapSpec>().unwrap(), MapSpec::Rotation(q(1, 3)));
        assert_eq!("table:1,0".parse::<MapSpec>().unwrap(), MapSpec::Table(vec![1, 0]));
        let pl: MapSpec = "pl:0,1/2,1:0,1,0".parse().unwrap();
        assert_eq!(pl.to_string(), "pl:0,1/2,1:0,1,0");
        assert!("spiral".parse::<MapSpec>().is_err());
        assert_eq!(MapSpec::Rotation(q(1, 3)).build(&GroundSpace::UnitInterval), Err(Error::SpaceMismatch));
    }
}
