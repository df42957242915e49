use crate::error::{Error, Result};
use crate::fuzzy::step::StepFuzzySet;
use crate::ground::DynMap;

/// Zadeh's extension `f̂(u)`, computed cut by cut: `[f̂(u)]_α = f(u_α)`.
pub fn zadeh_extend(f: &DynMap, u: &StepFuzzySet) -> Result<StepFuzzySet> {
    if f.space() != u.space() {
        return Err(Error::SpaceMismatch);
    }
    u.map_cuts(|c| c.image(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compacta::Compactum;
    use crate::fuzzy::characteristic;
    use crate::ground::{GroundSpace, Point};
    use crate::rational::{q, Rational};

    fn cut(xs: &[Rational]) -> Compactum {
        Compactum::from_coords(&GroundSpace::UnitInterval, xs.iter().cloned()).unwrap()
    }

    #[test]
    fn characteristic_law() {
        let k = cut(&[q(1, 4), q(1, 1)]);
        let got = zadeh_extend(&DynMap::tent(), &characteristic(&k)).unwrap();
        assert_eq!(got, characteristic(&cut(&[q(0, 1), q(1, 2)])));
    }

    #[test]
    fn images_per_level() {
        let u = StepFuzzySet::from_cuts(vec![q(1, 2), q(1, 1)], vec![cut(&[q(1, 4), q(1, 1)]), cut(&[q(1, 4)])]).unwrap();
        let got = zadeh_extend(&DynMap::tent(), &u).unwrap();
        assert_eq!(got.cuts(), &[cut(&[q(0, 1), q(1, 2)]), cut(&[q(1, 2)])]);
        assert_eq!(zadeh_extend(&DynMap::identity_interval(), &u).unwrap(), u);
    }

    #[test]
    fn collapsing_levels_merge() {
        // {1/4, 3/4} and {1/4} have the same tent image.
        let u = StepFuzzySet::from_cuts(vec![q(1, 3), q(1, 1)], vec![cut(&[q(1, 4), q(3, 4)]), cut(&[q(1, 4)])]).unwrap();
        let got = zadeh_extend(&DynMap::tent(), &u).unwrap();
        assert_eq!(got.levels(), &[q(1, 1)]);
        assert_eq!(got.membership(&Point::Interval(q(1, 2))), q(1, 1));
    }

    #[test]
    fn wrong_space() {
        let u = characteristic(&Compactum::from_coords(&GroundSpace::Circle, [q(0, 1)]).unwrap());
        assert_eq!(zadeh_extend(&DynMap::tent(), &u), Err(Error::SpaceMismatch));
    }
}
