//! Brute-force Skorokhod oracle on small grid instances.
//!
//! Instances live on the five points `{0, 1/4, 1/2, 3/4, 1}` with
//! memberships in `{0, 1/4, 1/2, 3/4, 1}`, stored as `[u8; 5]` in quarters.
//! The oracle tries every strictly increasing placement of the jump levels
//! of `v` on the grid `{k/32}`, builds `tv` pointwise from `t(v(x))`, and
//! evaluates `max(‖t‖, sup_α d_H(u_α, (tv)_α))` straight from membership
//! values. Everything is done in integer units of 1/32.

#![allow(dead_code)]

use fuzzdyn::fuzzy::StepFuzzySet;
use fuzzdyn::ground::{GroundSpace, Point};
use fuzzdyn::Rational;

pub type Grades = [u8; 5];

pub const UNIT: i64 = 32;

pub fn to_fuzzy(g: &Grades) -> StepFuzzySet {
    let grades = g
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| (Point::Interval(Rational::new(i as i64, 4)), Rational::new(m as i64, 4)))
        .collect();
    StepFuzzySet::from_membership(GroundSpace::UnitInterval, grades).expect("normal grid instance")
}

/// Hausdorff distance between point masks, in 1/32 units.
pub struct HausdorffTable([[i64; 32]; 32]);

impl HausdorffTable {
    pub fn new() -> Self {
        let mut t = [[0i64; 32]; 32];
        let pts = |m: usize| (0..5).filter(move |i| m & (1 << i) != 0).map(|i| i as i64 * 8);
        let directed = |a: usize, b: usize| pts(a).map(|x| pts(b).map(|y| (x - y).abs()).min().unwrap()).max().unwrap();
        for a in 1..32 {
            for b in 1..32 {
                t[a][b] = directed(a, b).max(directed(b, a));
            }
        }
        HausdorffTable(t)
    }
}

fn cut_mask(vals: &[i64; 5], alpha: i64) -> usize {
    // α = 0 is the support
    let mut m = 0;
    for (i, &v) in vals.iter().enumerate() {
        if v > 0 && v >= alpha.max(1) {
            m |= 1 << i;
        }
    }
    m
}

fn objective(table: &HausdorffTable, u: &[i64; 5], tv: &[i64; 5], alphas: &[i64]) -> i64 {
    alphas.iter().map(|&a| table.0[cut_mask(u, a)][cut_mask(tv, a)]).max().unwrap()
}

fn visit(
    table: &HausdorffTable,
    u: &[i64; 5],
    v: &Grades,
    jumps: &[i64],
    pos: &mut Vec<i64>,
    norm: i64,
    best: &mut i64,
) {
    let k = pos.len();
    if k == jumps.len() {
        let tv: [i64; 5] = std::array::from_fn(|i| {
            let b = v[i] as i64 * 8;
            if b == 0 {
                0
            } else if b == UNIT {
                UNIT
            } else {
                pos[jumps.iter().position(|&j| j == b).unwrap()]
            }
        });
        let mut alphas: Vec<i64> = u.iter().chain(tv.iter()).copied().collect();
        alphas.push(0);
        let d = objective(table, u, &tv, &alphas);
        *best = (*best).min(norm.max(d));
        return;
    }
    let lo = pos.last().map_or(1, |p| p + 1);
    let remaining = (jumps.len() - k - 1) as i64;
    for p in lo..=(UNIT - 1 - remaining) {
        let n = norm.max((p - jumps[k]).abs());
        if n >= *best {
            continue;
        }
        pos.push(p);
        visit(table, u, v, jumps, pos, n, best);
        pos.pop();
    }
}

/// Smallest objective over grid warps, as an exact rational.
pub fn oracle(table: &HausdorffTable, u: &Grades, v: &Grades) -> Rational {
    let uv: [i64; 5] = std::array::from_fn(|i| u[i] as i64 * 8);
    let mut jumps: Vec<i64> = v.iter().map(|&m| m as i64 * 8).filter(|&b| b > 0 && b < UNIT).collect();
    jumps.sort_unstable();
    jumps.dedup();
    let mut best = i64::MAX;
    visit(table, &uv, v, &jumps, &mut Vec::new(), 0, &mut best);
    Rational::new(best, UNIT)
}

fn normal(g: &Grades) -> bool {
    g.contains(&4)
}

/// All grade vectors over `points` with values from `values`; other points get 0.
pub fn enumerate(points: &[usize], values: &[u8]) -> Vec<Grades> {
    let mut out = Vec::new();
    let total = values.len().pow(points.len() as u32);
    for mut code in 0..total {
        let mut g = [0u8; 5];
        for &p in points {
            g[p] = values[code % values.len()];
            code /= values.len();
        }
        if normal(&g) {
            out.push(g);
        }
    }
    out
}

/// Four points carrying the four distinct grades, so three jumps.
pub fn three_jump_sets() -> Vec<Grades> {
    let mut out = Vec::new();
    for skip in 0..5 {
        let pts: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
        let mut perm = [1u8, 2, 3, 4];
        permutations(&mut perm, 0, &mut |p| {
            let mut g = [0u8; 5];
            for (k, &pt) in pts.iter().enumerate() {
                g[pt] = p[k];
            }
            out.push(g);
        });
    }
    out
}

fn permutations(a: &mut [u8; 4], k: usize, f: &mut impl FnMut(&[u8; 4])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}
