use crate::error::{Error, Result};
use crate::ground::{DynMap, GroundSpace, Point};
use crate::rational::Rational;

/// A non-empty finite subset of a ground space.
///
/// Points are kept sorted and deduplicated, so structural equality is set
/// equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Compactum {
    space: GroundSpace,
    points: Vec<Point>,
}

impl Compactum {
    pub fn new(space: GroundSpace, mut points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyCompactum);
        }
        for p in &points {
            space.check(p)?;
        }
        points.sort();
        points.dedup();
        Ok(Compactum { space, points })
    }

    /// Builds a compactum from scalar coordinates (interval or circle).
    pub fn from_coords<I: IntoIterator<Item = Rational>>(space: &GroundSpace, coords: I) -> Result<Self> {
        let points = coords.into_iter().map(|x| space.point(x)).collect::<Result<Vec<_>>>()?;
        Compactum::new(space.clone(), points)
    }

    pub fn singleton(space: GroundSpace, p: Point) -> Result<Self> {
        Compactum::new(space, vec![p])
    }

    pub fn space(&self) -> &GroundSpace {
        &self.space
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &Compactum) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    pub fn union(&self, other: &Compactum) -> Result<Compactum> {
        self.same_space(other)?;
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        pts.sort();
        pts.dedup();
        Ok(Compactum { space: self.space.clone(), points: pts })
    }

    pub(crate) fn same_space(&self, other: &Compactum) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// `d(p, A) = min over a of d(p, a)`.
    pub fn distance_to(&self, p: &Point) -> Result<Rational> {
        self.space.check(p)?;
        Ok(self.dist_to(p))
    }

    pub(crate) fn dist_to(&self, p: &Point) -> Rational {
        self.points
            .iter()
            .map(|a| self.space.dist(p, a))
            .min()
            .expect("compacta are non-empty")
    }

    /// `d(A, B) = max over a in A of d(a, B)`.
    pub fn directed_distance(&self, other: &Compactum) -> Result<Rational> {
        self.same_space(other)?;
        Ok(self.directed(other))
    }

    fn directed(&self, other: &Compactum) -> Rational {
        self.points.iter().map(|a| other.dist_to(a)).max().expect("compacta are non-empty")
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Rational {
        let mut best = Rational::zero();
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                let d = self.space.dist(a, b);
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Pointwise image `f(A)`.
    pub fn image(&self, f: &DynMap) -> Result<Compactum> {
        if f.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        let mut pts: Vec<Point> = self.points.iter().map(|p| f.apply_unchecked(p)).collect();
        pts.sort();
        pts.dedup();
        Ok(Compactum { space: self.space.clone(), points: pts })
    }

    pub fn iterate_image(&self, f: &DynMap, n: usize) -> Result<Compactum> {
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.image(f)?;
        }
        Ok(cur)
    }
}

/// Hausdorff distance `max{d(A,B), d(B,A)}`.
pub fn hausdorff_distance(a: &Compactum, b: &Compactum) -> Result<Rational> {
    a.same_space(b)?;
    Ok(hausdorff_unchecked(a, b))
}

pub(crate) fn hausdorff_unchecked(a: &Compactum, b: &Compactum) -> Rational {
    if a == b {
        return Rational::zero();
    }
    let ab = a.directed(b);
    let ba = b.directed(a);
    if ab > ba {
        ab
    } else {
        ba
    }
}

/// The extension of `f` to compacta, `A -> f(A)`.
pub fn image_compactum(f: &DynMap, a: &Compactum) -> Result<Compactum> {
    a.image(f)
}
