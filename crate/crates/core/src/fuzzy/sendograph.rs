use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fuzzy::step::StepFuzzySet;
use crate::ground::{DynMap, Point};
use crate::rational::Rational;

/// The vertical segment `{base} × [0, height]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SendographSegment {
    pub base: Point,
    pub height: Rational,
}

/// `send(u)`: one segment per support point, at its membership grade.
pub fn sendograph(u: &StepFuzzySet) -> Vec<SendographSegment> {
    u.graded_support().into_iter().map(|(base, height)| SendographSegment { base, height }).collect()
}

/// Image of a segment union under `f × id`. Segments landing on the same
/// base overlap, so only the tallest survives. Sorted by base.
pub fn sendograph_image(f: &DynMap, segments: &[SendographSegment]) -> Result<Vec<SendographSegment>> {
    let mut tallest: BTreeMap<Point, Rational> = BTreeMap::new();
    for s in segments {
        if !f.space().contains(&s.base) {
            return Err(Error::SpaceMismatch);
        }
        let y = f.apply(&s.base)?;
        let slot = tallest.entry(y).or_insert_with(Rational::zero);
        if s.height > *slot {
            *slot = s.height.clone();
        }
    }
    Ok(tallest.into_iter().map(|(base, height)| SendographSegment { base, height }).collect())
}
