//! JSON file formats for fuzzy sets.
//!
//! ```json
//! { "space": "interval", "levels": ["1/2", "1"], "cuts": [["0", "1"], ["0"]] }
//! ```
//!
//! `space` is `"interval"`, `"circle"` or `{"finite": n, "dist": [[..]]}`.
//! Levels exclude the implicit zero and end at one. Interval and circle
//! points are rational strings; finite-space points are element indices,
//! given as numbers or strings.

use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::compacta::Compactum;
use crate::error::{Error, Result};
use crate::fuzzy::StepFuzzySet;
use crate::ground::{FiniteMetric, GroundSpace, Point};
use crate::rational::Rational;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SpaceRepr {
    Named(String),
    Finite { finite: usize, dist: Vec<Vec<Rational>> },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Index(usize),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzySetRepr {
    space: SpaceRepr,
    levels: Vec<Rational>,
    cuts: Vec<Vec<PointRepr>>,
}

fn space_from_repr(repr: SpaceRepr) -> Result<GroundSpace> {
    match repr {
        SpaceRepr::Named(name) => match name.as_str() {
            "interval" => Ok(GroundSpace::UnitInterval),
            "circle" => Ok(GroundSpace::Circle),
            other => Err(Error::InvalidSpace(format!("unknown space {other:?}"))),
        },
        SpaceRepr::Finite { finite, dist } => {
            if dist.len() != finite {
                return Err(Error::InvalidSpace(format!("{finite} elements but {} table rows", dist.len())));
            }
            Ok(GroundSpace::finite(FiniteMetric::new(dist)?))
        }
    }
}

fn space_to_repr(space: &GroundSpace) -> SpaceRepr {
    match space {
        GroundSpace::Finite(m) => SpaceRepr::Finite { finite: m.len(), dist: m.table().to_vec() },
        other => SpaceRepr::Named(other.kind_name().to_string()),
    }
}

fn point_from_repr(space: &GroundSpace, repr: PointRepr) -> Result<Point> {
    match (space, repr) {
        (GroundSpace::Finite(_), PointRepr::Index(i)) => space.element(i),
        (GroundSpace::Finite(_), PointRepr::Text(s)) => {
            let i = s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad element index {s:?}")))?;
            space.element(i)
        }
        (_, PointRepr::Text(s)) => space.point(s.parse()?),
        (_, PointRepr::Index(i)) => space.point(Rational::from_integer(i as i64)),
    }
}

fn point_to_repr(p: &Point) -> PointRepr {
    match p {
        Point::Element(i) => PointRepr::Index(*i),
        other => PointRepr::Text(other.to_string()),
    }
}

fn from_repr(repr: FuzzySetRepr) -> Result<StepFuzzySet> {
    let space = space_from_repr(repr.space)?;
    let cuts = repr
        .cuts
        .into_iter()
        .map(|c| c.into_iter().map(|p| point_from_repr(&space, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    StepFuzzySet::from_parts(space, repr.levels, cuts)
}

fn to_repr(u: &StepFuzzySet) -> FuzzySetRepr {
    FuzzySetRepr {
        space: space_to_repr(u.space()),
        levels: u.levels().to_vec(),
        cuts: u.cuts().iter().map(|c| c.points().iter().map(point_to_repr).collect()).collect(),
    }
}

impl Serialize for StepFuzzySet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_repr(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for StepFuzzySet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        from_repr(FuzzySetRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Compactum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.points().iter().map(point_to_repr))
    }
}

/// Parses and validates a fuzzy set; the result is canonical.
pub fn parse_fuzzy_set(text: &str) -> Result<StepFuzzySet> {
    let repr: FuzzySetRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_repr(repr)
}

pub fn read_fuzzy_set(path: &Path) -> Result<StepFuzzySet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_fuzzy_set(&text)
}

/// Canonical pretty-printed JSON.
pub fn fuzzy_set_to_json(u: &StepFuzzySet) -> String {
    serde_json::to_string_pretty(u).expect("fuzzy sets always serialize")
}
