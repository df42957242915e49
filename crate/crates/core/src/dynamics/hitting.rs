//! Sampling-based search for orbit hits.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compacta::Compactum;
use crate::dynamics::witness::fuzzy_witness;
use crate::error::{Error, Result};
use crate::fuzzy::{d_infty, d_sendo, d_skorokhod, zadeh_extend, StepFuzzySet};
use crate::ground::{DynMap, GroundSpace, Point};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Infty,
    Skorokhod,
    Sendo,
}

impl MetricKind {
    pub fn distance(self, u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
        match self {
            MetricKind::Infty => d_infty(u, v),
            MetricKind::Skorokhod => d_skorokhod(u, v),
            MetricKind::Sendo => d_sendo(u, v),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Infty => "infty",
            MetricKind::Skorokhod => "skorokhod",
            MetricKind::Sendo => "sendo",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "infty" => Ok(MetricKind::Infty),
            "skorokhod" => Ok(MetricKind::Skorokhod),
            "sendo" => Ok(MetricKind::Sendo),
            other => Err(Error::Parse(format!("unknown metric {other:?}"))),
        }
    }
}

/// One hitting query: start near `u`, land near `v`.
#[derive(Clone, Debug)]
pub struct HittingQuery<'a> {
    pub f: &'a DynMap,
    pub u: &'a StepFuzzySet,
    pub eps_u: Rational,
    pub v: &'a StepFuzzySet,
    pub eps_v: Rational,
    pub max_iterate: usize,
    pub metric: MetricKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub n: Option<usize>,
    /// Distance at the hit, or the closest approach seen.
    pub distance: Rational,
    /// Whether the hit came from the constructed witness rather than the
    /// random start.
    pub via_witness: bool,
}

impl TrialOutcome {
    pub fn found(&self) -> bool {
        self.n.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingResult {
    pub found: bool,
    /// Smallest hitting iterate over all trials.
    pub n: Option<usize>,
    pub achieved_distance: Rational,
    pub metric_kind: MetricKind,
}

/// A random rational of absolute value below `r`.
fn jitter(rng: &mut ChaCha8Rng, r: &Rational) -> Rational {
    let j: i64 = rng.gen_range(-63..=63);
    r * Rational::new(j, 64)
}

fn move_point(space: &GroundSpace, p: &Point, delta: &Rational) -> Point {
    match p {
        Point::Interval(x) => Point::Interval((x + delta).clamp_to(&Rational::zero(), &Rational::one())),
        Point::Circle(x) => Point::Circle((x + delta).fract_pos()),
        Point::Element(_) => {
            debug_assert!(matches!(space, GroundSpace::Finite(_)));
            p.clone()
        }
    }
}

/// A random fuzzy set close to `u`.
///
/// Every support point moves by less than `ε/2` and the cuts follow their
/// points, which keeps `d_∞ < ε/2`. For the Skorokhod and sendograph
/// metrics the jump levels also move by less than `ε/2`; that leaves the
/// level-wise ball but stays inside the other two.
pub fn perturb(u: &StepFuzzySet, eps: &Rational, metric: MetricKind, rng: &mut ChaCha8Rng) -> Result<StepFuzzySet> {
    let r = eps / Rational::from_integer(2);
    let space = u.space();
    let moved: Vec<(Point, Point)> =
        u.support().points().iter().map(|p| (p.clone(), move_point(space, p, &jitter(rng, &r)))).collect();
    let image = |c: &Compactum| -> Result<Compactum> {
        let pts = c
            .points()
            .iter()
            .map(|p| moved.iter().find(|(a, _)| a == p).expect("cuts lie in the support").1.clone())
            .collect();
        Compactum::new(space.clone(), pts)
    };
    let cuts = u.cuts().iter().map(image).collect::<Result<Vec<_>>>()?;

    let mut levels = u.levels().to_vec();
    if metric != MetricKind::Infty {
        let last = levels.len() - 1;
        let shifted: Vec<Rational> =
            levels.iter().enumerate().map(|(i, l)| if i == last { l.clone() } else { l + jitter(rng, &r) }).collect();
        let ok = shifted[0].is_positive() && shifted.windows(2).all(|w| w[0] < w[1]);
        if ok {
            levels = shifted;
        }
    }
    StepFuzzySet::from_cuts(levels, cuts)
}

/// Iterates `start` and returns the first `n ≥ 1` within `eps_v` of the
/// target, or the closest approach. Stops early once the orbit returns to
/// its start.
fn scan(q: &HittingQuery<'_>, start: &StepFuzzySet) -> Result<(Option<usize>, Rational)> {
    let mut cur = start.clone();
    let mut best: Option<Rational> = None;
    for n in 1..=q.max_iterate {
        cur = zadeh_extend(q.f, &cur)?;
        let d = q.metric.distance(&cur, q.v)?;
        if d < q.eps_v {
            return Ok((Some(n), d));
        }
        if best.as_ref().is_none_or(|b| &d < b) {
            best = Some(d);
        }
        if &cur == start {
            break;
        }
    }
    Ok((None, best.unwrap_or_else(|| q.metric.distance(start, q.v).expect("same space"))))
}

fn check_query(q: &HittingQuery<'_>) -> Result<()> {
    if !q.eps_u.is_positive() || !q.eps_v.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    if q.max_iterate == 0 {
        return Err(Error::InvalidArgument("max iterate must be at least 1".into()));
    }
    if q.u.space() != q.v.space() || q.f.space() != q.u.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

/// A single trial: a random start near `u`, then the constructed witness
/// when the map has an oracle and the random start missed.
pub fn hitting_trial(q: &HittingQuery<'_>, seed: u64, trial: usize) -> Result<TrialOutcome> {
    check_query(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let start = perturb(q.u, &q.eps_u, q.metric, &mut rng)?;
    let (n, distance) = scan(q, &start)?;
    if n.is_some() || !q.f.has_mixing_oracle() {
        return Ok(TrialOutcome { trial, n, distance, via_witness: false });
    }
    let eps = if q.eps_u < q.eps_v { q.eps_u.clone() } else { q.eps_v.clone() };
    let cert = fuzzy_witness(q.f, q.u, q.v, &eps)?;
    let (wn, wd) = scan(q, &cert.w)?;
    if wn.is_some() {
        Ok(TrialOutcome { trial, n: wn, distance: wd, via_witness: true })
    } else {
        let closest = if wd < distance { wd } else { distance };
        Ok(TrialOutcome { trial, n: None, distance: closest, via_witness: false })
    }
}

/// All trials, in trial order. Trials run in parallel.
pub fn hitting_trials(q: &HittingQuery<'_>, trials: usize, seed: u64) -> Result<Vec<TrialOutcome>> {
    check_query(q)?;
    (0..trials).into_par_iter().map(|t| hitting_trial(q, seed, t)).collect()
}

/// Searches for `w` within `ε_u` of `u` and `n ≤ N` with `f̂ⁿ(w)` within
/// `ε_v` of `v`. Deterministic in `seed`.
#[allow(clippy::too_many_arguments)]
pub fn empirical_hitting(
    f: &DynMap,
    u: &StepFuzzySet,
    eps_u: &Rational,
    v: &StepFuzzySet,
    eps_v: &Rational,
    max_iterate: usize,
    metric: MetricKind,
    trials: usize,
    seed: u64,
) -> Result<HittingResult> {
    let q = HittingQuery { f, u, eps_u: eps_u.clone(), v, eps_v: eps_v.clone(), max_iterate, metric };
    Ok(summarize(&hitting_trials(&q, trials, seed)?, metric))
}

/// Folds trial outcomes into a single result.
pub fn summarize(outcomes: &[TrialOutcome], metric: MetricKind) -> HittingResult {
    let first_hit = outcomes.iter().filter(|o| o.found()).min_by_key(|o| o.n);
    match first_hit {
        Some(o) => HittingResult { found: true, n: o.n, achieved_distance: o.distance.clone(), metric_kind: metric },
        None => HittingResult {
            found: false,
            n: None,
            achieved_distance: outcomes.iter().map(|o| o.distance.clone()).min().unwrap_or_else(Rational::one),
            metric_kind: metric,
        },
    }
}
