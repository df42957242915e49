//! Exact Skorokhod distance between step fuzzy sets.
//!
//! A warp `t` only matters through where it sends the jump levels of `v`.
//! Given the order in which the jumps of `u` and of `tv` occur, the set of
//! overlapping piece pairs is a monotone staircase through the grid of
//! (piece of `u`, piece of `v`), and each jump of `v` is confined to a
//! closed interval of positions: a single jump level of `u` (when the two
//! jumps are aligned) or the closure of one piece of `u`. The cheapest
//! position is the clamp of the original level into that interval, and the
//! clamps are automatically monotone, so the objective
//! `max(‖t‖, d_∞(u, tv))` decomposes along the staircase and a bottleneck
//! shortest path gives the infimum.

use crate::compacta::hausdorff_unchecked;
use crate::error::Result;
use crate::fuzzy::metrics::same_space;
use crate::fuzzy::step::StepFuzzySet;
use crate::fuzzy::warp::TimeWarp;
use crate::rational::Rational;

/// Optimal value and a warp attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkorokhodSolution {
    pub distance: Rational,
    /// A warp with `max(‖t‖, d_∞(u, tv)) = distance`.
    pub warp: TimeWarp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Start,
    /// Jump of `u` inside the current piece of `tv`.
    UJump,
    /// Jump of `v` placed inside the current piece of `u`.
    VJump,
    /// Jumps of both aligned.
    Both,
}

/// Levels with the implicit leading zero: `[0, α_1, .., α_n]`.
fn with_zero(levels: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(levels.len() + 1);
    out.push(Rational::zero());
    out.extend(levels.iter().cloned());
    out
}

fn dist_to_interval(x: &Rational, lo: &Rational, hi: &Rational) -> Rational {
    if x < lo {
        lo - x
    } else if x > hi {
        x - hi
    } else {
        Rational::zero()
    }
}

fn max_r(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a
    } else {
        b
    }
}

struct Grid {
    n: usize,
    m: usize,
    a: Vec<Rational>,
    b: Vec<Rational>,
    cost: Vec<Vec<Rational>>,
}

impl Grid {
    fn new(u: &StepFuzzySet, v: &StepFuzzySet) -> Self {
        let cost = u
            .cuts()
            .iter()
            .map(|c| v.cuts().iter().map(|d| hausdorff_unchecked(c, d)).collect())
            .collect();
        Grid { n: u.piece_count(), m: v.piece_count(), a: with_zero(u.levels()), b: with_zero(v.levels()), cost }
    }

    /// Displacement of jump `b[j]` placed inside the closure of piece `i` of `u`.
    fn inside_cost(&self, i: usize, j: usize) -> Rational {
        dist_to_interval(&self.b[j], &self.a[i], &self.a[i + 1])
    }

    /// Displacement of jump `b[j]` aligned with jump `a[i]`.
    fn aligned_cost(&self, i: usize, j: usize) -> Rational {
        (&self.b[j] - &self.a[i]).abs()
    }
}

/// Bottleneck DP. Returns the table of best values and the step used to
/// reach each cell.
fn solve(grid: &Grid) -> (Vec<Vec<Rational>>, Vec<Vec<Step>>) {
    let (n, m) = (grid.n, grid.m);
    let mut best = vec![vec![Rational::zero(); m]; n];
    let mut how = vec![vec![Step::Start; m]; n];
    for i in 0..n {
        for j in 0..m {
            if i == 0 && j == 0 {
                best[0][0] = grid.cost[0][0].clone();
                continue;
            }
            let mut cand: Option<(Rational, Step)> = None;
            let mut offer = |value: Rational, step: Step| {
                if cand.as_ref().is_none_or(|(b, _)| &value < b) {
                    cand = Some((value, step));
                }
            };
            if i > 0 && j > 0 {
                offer(max_r(best[i - 1][j - 1].clone(), grid.aligned_cost(i, j)), Step::Both);
            }
            if i > 0 {
                offer(best[i - 1][j].clone(), Step::UJump);
            }
            if j > 0 {
                offer(max_r(best[i][j - 1].clone(), grid.inside_cost(i, j)), Step::VJump);
            }
            let (value, step) = cand.expect("some predecessor exists");
            best[i][j] = max_r(value, grid.cost[i][j].clone());
            how[i][j] = step;
        }
    }
    (best, how)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Aligned,
    Inside,
}

/// Positions for the jumps of `v` along the optimal staircase, then made
/// strictly increasing without raising the objective.
fn realize(grid: &Grid, how: &[Vec<Step>]) -> Vec<(Rational, Rational)> {
    let m = grid.m;
    // pos[j] for j in 1..m (jump between pieces j-1 and j of v)
    let mut pos: Vec<Option<(Rational, Slot)>> = vec![None; m];
    let (mut i, mut j) = (grid.n - 1, m - 1);
    loop {
        match how[i][j] {
            Step::Start => break,
            Step::UJump => i -= 1,
            Step::VJump => {
                let p = grid.b[j].clamp_to(&grid.a[i], &grid.a[i + 1]);
                pos[j] = Some((p, Slot::Inside));
                j -= 1;
            }
            Step::Both => {
                pos[j] = Some((grid.a[i].clone(), Slot::Aligned));
                i -= 1;
                j -= 1;
            }
        }
    }
    let mut placed: Vec<(Rational, Rational, Slot)> = (1..m)
        .map(|j| {
            let (p, slot) = pos[j].clone().expect("every jump of v is placed");
            (grid.b[j].clone(), p, slot)
        })
        .collect();
    spread_ties(&mut placed, &grid.a);
    placed.into_iter().map(|(s, t, _)| (s, t)).collect()
}

/// Equal positions only occur at jump levels of `u`. In each run one member
/// stays (the aligned one, or else the one farthest from its original
/// level); the others step away from it by multiples of a gap small enough
/// to stay inside their piece and below the anchor's displacement.
fn spread_ties(placed: &mut [(Rational, Rational, Slot)], u_levels: &[Rational]) {
    if placed.len() < 2 {
        return;
    }
    let mut marks: Vec<Rational> = placed.iter().map(|(_, p, _)| p.clone()).collect();
    marks.extend(u_levels.iter().cloned());
    marks.push(Rational::one());
    marks.sort();
    marks.dedup();
    let mut gap = marks.windows(2).map(|w| &w[1] - &w[0]).min().unwrap_or_else(Rational::one);
    for w in placed.windows(2) {
        let d = &w[1].0 - &w[0].0;
        if d < gap {
            gap = d;
        }
    }
    let delta = gap / Rational::from_integer(placed.len() as i64 + 1);

    let mut start = 0;
    while start < placed.len() {
        let mut end = start + 1;
        while end < placed.len() && placed[end].1 == placed[start].1 {
            end += 1;
        }
        if end - start > 1 {
            let run = &mut placed[start..end];
            let anchor = run.iter().position(|(_, _, s)| *s == Slot::Aligned).unwrap_or_else(|| {
                let c = &run[0].1;
                (0..run.len()).max_by_key(|&k| (&run[k].0 - c).abs()).expect("non-empty run")
            });
            let c = run[anchor].1.clone();
            for (k, entry) in run.iter_mut().enumerate() {
                let steps = Rational::from_integer(k.abs_diff(anchor) as i64);
                if k < anchor {
                    entry.1 = &c - &delta * &steps;
                } else if k > anchor {
                    entry.1 = &c + &delta * &steps;
                }
            }
        }
        start = end;
    }
}

/// Exact Skorokhod distance together with an optimal warp.
pub fn skorokhod(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<SkorokhodSolution> {
    same_space(u, v)?;
    let grid = Grid::new(u, v);
    let (best, how) = solve(&grid);
    let distance = best[grid.n - 1][grid.m - 1].clone();
    let warp = TimeWarp::through(realize(&grid, &how)).expect("realized knots are strictly increasing");
    Ok(SkorokhodSolution { distance, warp })
}

/// `d_0(u, v) = inf { ε : ‖t‖ ≤ ε and d_∞(u, tv) ≤ ε for some warp t }`.
pub fn d_skorokhod(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
    Ok(skorokhod(u, v)?.distance)
}

/// `(u, v) ∈ G[V_εm, εw]`: some warp with `‖t‖ < εw` keeps every pair
/// `(u_α, v_{t(α)})` within Hausdorff distance `< εm`.
pub fn g_entourage_contains(
    eps_metric: &Rational,
    eps_warp: &Rational,
    u: &StepFuzzySet,
    v: &StepFuzzySet,
) -> Result<bool> {
    same_space(u, v)?;
    if !eps_metric.is_positive() || !eps_warp.is_positive() {
        return Err(crate::error::Error::NonPositiveEpsilon);
    }
    // v_{t(α)} = (t⁻¹v)_α and ‖t⁻¹‖ = ‖t‖, so this is reachability on the
    // same staircase grid with both budgets strict.
    let grid = Grid::new(u, v);
    let (n, m) = (grid.n, grid.m);
    let mut ok = vec![vec![false; m]; n];
    for i in 0..n {
        for j in 0..m {
            if &grid.cost[i][j] >= eps_metric {
                continue;
            }
            ok[i][j] = (i == 0 && j == 0)
                || (i > 0 && ok[i - 1][j])
                || (j > 0 && ok[i][j - 1] && &grid.inside_cost(i, j) < eps_warp)
                || (i > 0 && j > 0 && ok[i - 1][j - 1] && &grid.aligned_cost(i, j) < eps_warp);
        }
    }
    Ok(ok[n - 1][m - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compacta::Compactum;
    use crate::fuzzy::{characteristic, d_infty, warp_apply};
    use crate::ground::{GroundSpace, Point};
    use crate::rational::q;

    fn graded(pairs: &[(Rational, Rational)]) -> StepFuzzySet {
        StepFuzzySet::from_membership(
            GroundSpace::UnitInterval,
            pairs.iter().map(|(x, g)| (Point::Interval(x.clone()), g.clone())).collect(),
        )
        .unwrap()
    }

    fn objective(u: &StepFuzzySet, v: &StepFuzzySet, t: &TimeWarp) -> Rational {
        max_r(t.norm(), d_infty(u, &warp_apply(t, v)).unwrap())
    }

    #[test]
    fn identical_sets() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 2), q(1, 3))]);
        let s = skorokhod(&u, &u).unwrap();
        assert_eq!(s.distance, Rational::zero());
        assert_eq!(objective(&u, &u, &s.warp), Rational::zero());
    }

    #[test]
    fn crisp_sets_reduce_to_hausdorff() {
        let k = Compactum::from_coords(&GroundSpace::UnitInterval, [q(0, 1), q(1, 2)]).unwrap();
        let l = Compactum::from_coords(&GroundSpace::UnitInterval, [q(3, 4)]).unwrap();
        let d = d_skorokhod(&characteristic(&k), &characteristic(&l)).unwrap();
        assert_eq!(d, q(3, 4));
    }

    #[test]
    fn height_gap_pair() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 5))]);
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 2))]);
        let s = skorokhod(&u, &v).unwrap();
        assert_eq!(s.distance, q(1, 10));
        assert_eq!(s.warp.eval(&q(1, 2)), q(3, 5));
        assert_eq!(objective(&u, &v, &s.warp), q(1, 10));
        assert_eq!(d_skorokhod(&v, &u).unwrap(), q(1, 10));
    }

    #[test]
    fn g_entourage_examples() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 5))]);
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 2))]);
        assert!(g_entourage_contains(&q(1, 100), &q(1, 100), &u, &u).unwrap());
        assert!(g_entourage_contains(&q(1, 100), &q(1, 8), &u, &v).unwrap());
        assert!(!g_entourage_contains(&q(1, 2), &q(1, 100), &u, &v).unwrap());
        assert!(!g_entourage_contains(&q(1, 100), &q(1, 10), &u, &v).unwrap());
    }

    #[test]
    fn colliding_jumps_are_spread() {
        // v's two jumps both want to sit at u's single jump 1/4.
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 4))]);
        let v = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 4)), (q(1, 2), q(1, 2))]);
        let s = skorokhod(&u, &v).unwrap();
        assert_eq!(objective(&u, &v, &s.warp), s.distance);
        assert!(s.distance <= d_infty(&u, &v).unwrap());
    }

    #[test]
    fn distance_bounded_by_level_wise() {
        let u = graded(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 3)), (q(1, 2), q(2, 3))]);
        let v = graded(&[(q(1, 4), q(1, 1)), (q(1, 1), q(1, 2))]);
        let s = skorokhod(&u, &v).unwrap();
        assert!(s.distance <= d_infty(&u, &v).unwrap());
        assert_eq!(objective(&u, &v, &s.warp), s.distance);
    }
}
