use crate::compacta::Compactum;
use crate::error::{Error, Result};
use crate::ground::{GroundSpace, Point};
use crate::rational::Rational;

/// A normal fuzzy set with finitely many membership levels and finite cuts.
///
/// `levels` holds `α_1 < ... < α_n = 1` (`α_0 = 0` is implicit) and
/// `cuts[i]` is the cut on the level piece `(α_{i-1}, α_i]`; the chain of
/// cuts is strictly decreasing. The bottom cut doubles as the support and as
/// the cut at level zero. Values are always canonical: adjacent equal cuts
/// are merged on construction, so equal fuzzy sets compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepFuzzySet {
    space: GroundSpace,
    levels: Vec<Rational>,
    cuts: Vec<Compactum>,
}

/// Checks a raw level/cut description. Empty cut lists stand for empty sets.
pub fn validate(space: &GroundSpace, levels: &[Rational], cuts: &[Vec<Point>]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::InvalidLevels("at least one level is required".into()));
    }
    if levels.len() != cuts.len() {
        return Err(Error::InvalidLevels(format!("{} levels for {} cuts", levels.len(), cuts.len())));
    }
    if !levels[0].is_positive() {
        return Err(Error::InvalidLevels("levels must be positive (level 0 is implicit)".into()));
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidLevels("levels must be strictly increasing".into()));
    }
    if levels[levels.len() - 1] != Rational::one() {
        return Err(Error::InvalidLevels("the last level must be 1".into()));
    }
    for cut in cuts {
        for p in cut {
            space.check(p)?;
        }
    }
    if cuts[cuts.len() - 1].is_empty() {
        return Err(Error::NotNormal);
    }
    for w in cuts.windows(2) {
        if !w[1].iter().all(|p| w[0].contains(p)) {
            return Err(Error::CutsNotDecreasing);
        }
    }
    Ok(())
}

impl StepFuzzySet {
    /// Validates and canonicalizes a level/cut description.
    pub fn from_parts(space: GroundSpace, levels: Vec<Rational>, cuts: Vec<Vec<Point>>) -> Result<Self> {
        validate(&space, &levels, &cuts)?;
        let cuts = cuts
            .into_iter()
            .map(|c| Compactum::new(space.clone(), c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(space, levels, cuts))
    }

    /// Same as [`StepFuzzySet::from_parts`] for cuts that are already compacta.
    pub fn from_cuts(levels: Vec<Rational>, cuts: Vec<Compactum>) -> Result<Self> {
        let space = cuts.first().ok_or(Error::NotNormal)?.space().clone();
        if cuts.iter().any(|c| c.space() != &space) {
            return Err(Error::SpaceMismatch);
        }
        let raw: Vec<Vec<Point>> = cuts.iter().map(|c| c.points().to_vec()).collect();
        validate(&space, &levels, &raw)?;
        Ok(Self::canonical(space, levels, cuts))
    }

    /// Builds the fuzzy set with the given membership grades; points not
    /// listed (or listed with grade 0) are outside the support.
    pub fn from_membership(space: GroundSpace, grades: Vec<(Point, Rational)>) -> Result<Self> {
        for (p, g) in &grades {
            space.check(p)?;
            if !g.in_unit_interval() {
                return Err(Error::LevelOutOfRange(g.to_string()));
            }
        }
        let mut levels: Vec<Rational> = grades.iter().map(|(_, g)| g.clone()).filter(|g| g.is_positive()).collect();
        levels.sort();
        levels.dedup();
        if levels.last() != Some(&Rational::one()) {
            return Err(Error::NotNormal);
        }
        let cuts = levels
            .iter()
            .map(|a| {
                let pts = grades.iter().filter(|(_, g)| g >= a).map(|(p, _)| p.clone()).collect();
                Compactum::new(space.clone(), pts)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(space, levels, cuts))
    }

    pub(crate) fn canonical(space: GroundSpace, levels: Vec<Rational>, cuts: Vec<Compactum>) -> Self {
        let mut out_levels: Vec<Rational> = Vec::with_capacity(levels.len());
        let mut out_cuts: Vec<Compactum> = Vec::with_capacity(cuts.len());
        for (level, cut) in levels.into_iter().zip(cuts) {
            if out_cuts.last() == Some(&cut) {
                *out_levels.last_mut().expect("parallel vectors") = level;
            } else {
                out_levels.push(level);
                out_cuts.push(cut);
            }
        }
        StepFuzzySet { space, levels: out_levels, cuts: out_cuts }
    }

    /// Re-checks the representation invariants.
    pub fn validate(&self) -> Result<()> {
        let raw: Vec<Vec<Point>> = self.cuts.iter().map(|c| c.points().to_vec()).collect();
        validate(&self.space, &self.levels, &raw)?;
        if self.cuts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLevels("adjacent equal cuts are not canonical".into()));
        }
        Ok(())
    }

    pub fn space(&self) -> &GroundSpace {
        &self.space
    }

    /// `α_1, .., α_n` (without the implicit zero).
    pub fn levels(&self) -> &[Rational] {
        &self.levels
    }

    pub fn cuts(&self) -> &[Compactum] {
        &self.cuts
    }

    pub fn support(&self) -> &Compactum {
        &self.cuts[0]
    }

    pub fn top_cut(&self) -> &Compactum {
        self.cuts.last().expect("at least one cut")
    }

    /// Number of level pieces.
    pub fn piece_count(&self) -> usize {
        self.levels.len()
    }

    /// Membership grade of `x`.
    pub fn membership(&self, x: &Point) -> Rational {
        self.cuts
            .iter()
            .rposition(|c| c.contains(x))
            .map(|i| self.levels[i].clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Support points paired with their grades.
    pub fn graded_support(&self) -> Vec<(Point, Rational)> {
        self.support().points().iter().map(|p| (p.clone(), self.membership(p))).collect()
    }

    /// Index of the piece whose cut is `u_α`.
    pub(crate) fn piece_of(&self, alpha: &Rational) -> usize {
        self.levels.partition_point(|l| l < alpha)
    }

    pub fn alpha_cut(&self, alpha: &Rational) -> Result<&Compactum> {
        if !alpha.in_unit_interval() {
            return Err(Error::LevelOutOfRange(alpha.to_string()));
        }
        Ok(&self.cuts[self.piece_of(alpha)])
    }

    /// `u_{α+}`, the limit of `u_λ` as `λ` decreases to `α`.
    pub fn right_limit_cut(&self, alpha: &Rational) -> Result<&Compactum> {
        if alpha.is_negative() || alpha >= &Rational::one() {
            return Err(Error::LevelOutOfRange(alpha.to_string()));
        }
        Ok(&self.cuts[self.levels.partition_point(|l| l <= alpha)])
    }

    /// Same cuts at new levels; canonical form is preserved because the
    /// cuts do not change.
    pub(crate) fn with_levels(&self, levels: Vec<Rational>) -> Self {
        StepFuzzySet { space: self.space.clone(), levels, cuts: self.cuts.clone() }
    }

    /// Maps each cut through `g`, then re-canonicalizes.
    pub(crate) fn map_cuts<F>(&self, mut g: F) -> Result<Self>
    where
        F: FnMut(&Compactum) -> Result<Compactum>,
    {
        let cuts = self.cuts.iter().map(&mut g).collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(self.space.clone(), self.levels.clone(), cuts))
    }
}

/// The characteristic function of `K`.
pub fn characteristic(k: &Compactum) -> StepFuzzySet {
    StepFuzzySet { space: k.space().clone(), levels: vec![Rational::one()], cuts: vec![k.clone()] }
}

/// Validates a fuzzy set (a no-op for values built through the constructors).
pub fn validate_set(u: &StepFuzzySet) -> Result<()> {
    u.validate()
}

pub fn alpha_cut<'a>(u: &'a StepFuzzySet, alpha: &Rational) -> Result<&'a Compactum> {
    u.alpha_cut(alpha)
}

pub fn right_limit_cut<'a>(u: &'a StepFuzzySet, alpha: &Rational) -> Result<&'a Compactum> {
    u.right_limit_cut(alpha)
}
