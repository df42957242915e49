use crate::error::{Error, Result};
use crate::fuzzy::step::StepFuzzySet;
use crate::rational::Rational;

/// An increasing piecewise-linear homeomorphism of `[0, 1]`.
///
/// Knots `(s_i, t_i)` run from `(0, 0)` to `(1, 1)` and are strictly
/// increasing in both coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TimeWarp {
    knots: Vec<(Rational, Rational)>,
}

impl TimeWarp {
    pub fn new(knots: Vec<(Rational, Rational)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidWarp("at least the two end knots are needed".into()));
        }
        let (first, last) = (&knots[0], &knots[knots.len() - 1]);
        if !first.0.is_zero() || !first.1.is_zero() || last.0 != Rational::one() || last.1 != Rational::one() {
            return Err(Error::InvalidWarp("must fix 0 and 1".into()));
        }
        if knots.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 >= w[1].1) {
            return Err(Error::InvalidWarp("knots must be strictly increasing".into()));
        }
        Ok(TimeWarp { knots })
    }

    pub fn identity() -> Self {
        TimeWarp { knots: vec![(Rational::zero(), Rational::zero()), (Rational::one(), Rational::one())] }
    }

    /// Warp with interior knots `(s, t)`; the end knots are added.
    pub fn through<I: IntoIterator<Item = (Rational, Rational)>>(interior: I) -> Result<Self> {
        let mut knots = vec![(Rational::zero(), Rational::zero())];
        knots.extend(interior);
        knots.push((Rational::one(), Rational::one()));
        TimeWarp::new(knots)
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    /// `t(α)` for `α` in `[0, 1]`.
    pub fn eval(&self, alpha: &Rational) -> Rational {
        let i = self.knots.partition_point(|(s, _)| s < alpha);
        if i == 0 {
            return self.knots[0].1.clone();
        }
        if i == self.knots.len() {
            return self.knots[i - 1].1.clone();
        }
        let (s1, t1) = &self.knots[i];
        if s1 == alpha {
            return t1.clone();
        }
        let (s0, t0) = &self.knots[i - 1];
        t0 + (alpha - s0) * (t1 - t0) / (s1 - s0)
    }

    pub fn inverse(&self) -> TimeWarp {
        TimeWarp { knots: self.knots.iter().map(|(s, t)| (t.clone(), s.clone())).collect() }
    }

    /// `‖t‖ = sup |t(α) - α|`, attained at a knot.
    pub fn norm(&self) -> Rational {
        self.knots.iter().map(|(s, t)| (t - s).abs()).max().expect("warps have knots")
    }
}

/// `‖t‖`.
pub fn warp_norm(t: &TimeWarp) -> Rational {
    t.norm()
}

/// The reparametrized set `tv`, with `(tv)(x) = t(v(x))`, so that
/// `(tv)_α = v_{t⁻¹(α)}`: cuts stay, levels move through `t`.
pub fn warp_apply(t: &TimeWarp, v: &StepFuzzySet) -> StepFuzzySet {
    v.with_levels(v.levels().iter().map(|l| t.eval(l)).collect())
}
