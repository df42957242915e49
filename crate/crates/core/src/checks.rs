//! Property suites behind `fuzzdyn check`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compacta::{compact_witness, hausdorff_distance, k_entourage_contains, Compactum, EntourageRef, FiniteUniformity};
use crate::dynamics::{
    empirical_hitting, fuzzy_witness, isometry_separation_certificate, iterate_fuzzy, weak_mixing_check,
    weak_mixing_holds, MetricKind,
};
use crate::error::{Error, Result};
use crate::fuzzy::{
    characteristic, d_infty, d_sendo, d_skorokhod, f_entourage_contains, level_partition, merge_partitions,
    partition_holds, sendograph, sendograph_image, skorokhod, warp_apply, zadeh_extend, StepFuzzySet,
};
use crate::ground::{DynMap, FiniteMetric, GroundSpace, Point};
use crate::random::{random_compactum, random_finite_space, random_fuzzy_set, random_table_map, random_warp};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Metrics,
    Zadeh,
    Entourage,
    Witness,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "metrics" => Ok(Suite::Metrics),
            "zadeh" => Ok(Suite::Zadeh),
            "entourage" => Ok(Suite::Entourage),
            "witness" => Ok(Suite::Witness),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Metrics => "metrics",
            Suite::Zadeh => "zadeh",
            Suite::Entourage => "entourage",
            Suite::Witness => "witness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Tally {
    order: Vec<String>,
    by_name: BTreeMap<String, PropertyReport>,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let entry = self.by_name.entry(name.to_string()).or_insert_with(|| {
            self.order.push(name.to_string());
            PropertyReport { name: name.to_string(), checked: 0, failed: 0, first_failure: None }
        });
        entry.checked += 1;
        if !ok {
            entry.failed += 1;
            if entry.first_failure.is_none() {
                entry.first_failure = Some(detail());
            }
        }
    }

    fn finish(mut self) -> Vec<PropertyReport> {
        self.order.iter().map(|n| self.by_name.remove(n).expect("recorded")).collect()
    }
}

fn two() -> Rational {
    Rational::from_integer(2)
}

/// Runs one suite with `cases` random cases per property.
pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> Result<Vec<PropertyReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    match suite {
        Suite::Metrics => metrics(&mut rng, cases, &mut t)?,
        Suite::Zadeh => zadeh(&mut rng, cases, &mut t)?,
        Suite::Entourage => entourage(&mut rng, cases, &mut t)?,
        Suite::Witness => witness(&mut rng, cases, &mut t)?,
    }
    Ok(t.finish())
}

fn axioms(t: &mut Tally, name: &str, d: impl Fn(usize, usize) -> Rational, same: impl Fn(usize, usize) -> bool) {
    let (ab, ba, bc, ac) = (d(0, 1), d(1, 0), d(1, 2), d(0, 2));
    t.record(&format!("{name} identity"), d(0, 0).is_zero() && (ab.is_zero() == same(0, 1)), || format!("d(a,b) = {ab}"));
    t.record(&format!("{name} symmetry"), ab == ba, || format!("{ab} vs {ba}"));
    t.record(&format!("{name} triangle"), ac <= &ab + &bc, || format!("{ac} > {ab} + {bc}"));
}

fn metrics(rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) -> Result<()> {
    for i in 0..cases {
        let space = if i % 2 == 0 { GroundSpace::UnitInterval } else { GroundSpace::Circle };
        let ks: Vec<Compactum> = (0..3).map(|_| random_compactum(rng, &space, 8)).collect();
        axioms(t, "d_H", |a, b| hausdorff_distance(&ks[a], &ks[b]).expect("same space"), |a, b| ks[a] == ks[b]);

        let us: Vec<StepFuzzySet> = (0..3).map(|_| random_fuzzy_set(rng, &space, 4, 6)).collect();
        axioms(t, "d_inf", |a, b| d_infty(&us[a], &us[b]).expect("same space"), |a, b| us[a] == us[b]);
        axioms(t, "d_S", |a, b| d_sendo(&us[a], &us[b]).expect("same space"), |a, b| us[a] == us[b]);

        let (u, v) = (&us[0], &us[1]);
        let (di, ds) = (d_infty(u, v)?, d_sendo(u, v)?);
        let sol = skorokhod(u, v)?;
        let d0 = sol.distance.clone();
        t.record("d_0 <= d_inf", d0 <= di, || format!("{d0} > {di}"));
        t.record("d_S <= d_inf", ds <= di, || format!("{ds} > {di}"));
        t.record("d_S <= 2 d_0", ds <= &d0 * two(), || format!("{ds} > 2*{d0}"));
        let attained = {
            let tv = warp_apply(&sol.warp, v);
            let norm = sol.warp.norm();
            let inner = d_infty(u, &tv)?;
            if norm > inner { norm } else { inner }
        };
        t.record("d_0 warp attains value", attained == d0, || format!("warp gives {attained}, value {d0}"));
        let eps = Rational::new(rng.gen_range(1..=16), 16);
        t.record("F[V_eps] iff d_inf < eps", f_entourage_contains(&eps, u, v)? == (di < eps), || format!("eps {eps}, d {di}"));
    }
    Ok(())
}

/// The maps exercised by the Zadeh suite: tent, doubling, a rotation and a
/// piecewise-linear map.
fn sample_map(rng: &mut ChaCha8Rng) -> DynMap {
    match rng.gen_range(0..4) {
        0 => DynMap::tent(),
        1 => DynMap::doubling(),
        2 => DynMap::rotation(Rational::new(rng.gen_range(0..12), 12)),
        _ => {
            let mid = Rational::new(rng.gen_range(1..8), 8);
            let vals = vec![
                Rational::new(rng.gen_range(0..=4), 8),
                Rational::new(rng.gen_range(5..=8), 8),
                Rational::new(rng.gen_range(0..=4), 8),
            ];
            DynMap::piecewise_linear(vec![Rational::zero(), mid, Rational::one()], vals).expect("non-flat segments")
        }
    }
}

/// Membership of `f̂(u)` at `y` straight from the sup formula.
fn sup_membership(f: &DynMap, u: &StepFuzzySet, y: &Point) -> Result<Rational> {
    Ok(f.preimage_points(y)?.iter().map(|z| u.membership(z)).max().unwrap_or_else(Rational::zero))
}

fn zadeh(rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) -> Result<()> {
    for _ in 0..cases {
        let f = sample_map(rng);
        let space = f.space().clone();
        let u = random_fuzzy_set(rng, &space, 4, 6);
        let fu = zadeh_extend(&f, &u)?;

        let mut probes: Vec<Rational> = u.levels().to_vec();
        probes.push(Rational::zero());
        probes.push(Rational::new(rng.gen_range(0..=24), 24));
        let ok = probes.iter().all(|a| {
            let lhs = fu.alpha_cut(a).expect("level in range");
            let rhs = u.alpha_cut(a).expect("level in range").image(&f).expect("same space");
            lhs == &rhs
        });
        t.record("level identity", ok, || format!("u = {u:?}"));

        let mut pts: Vec<Point> = fu.support().points().to_vec();
        pts.push(crate::random::random_point(rng, &space));
        let ok = pts.iter().all(|y| sup_membership(&f, &u, y).expect("invertible") == fu.membership(y));
        t.record("sup formula", ok, || format!("u = {u:?}"));

        let k = random_compactum(rng, &space, 6);
        t.record("characteristic law", zadeh_extend(&f, &characteristic(&k))? == characteristic(&k.image(&f)?), || {
            format!("K = {k:?}")
        });

        let w = random_warp(rng, 3);
        t.record("warp commutation", zadeh_extend(&f, &warp_apply(&w, &u))? == warp_apply(&w, &fu), || {
            format!("u = {u:?}, t = {w:?}")
        });

        t.record("sendograph image", sendograph(&fu) == sendograph_image(&f, &sendograph(&u))?, || format!("u = {u:?}"));
    }
    for _ in 0..cases {
        let n_pts = rng.gen_range(1..=4);
        let space = random_finite_space(rng, n_pts);
        let f = random_table_map(rng, &space);
        let u = random_fuzzy_set(rng, &space, 4, 4);
        let n = rng.gen_range(0..=4);
        t.record("iterate law", iterate_fuzzy(&f, &u, n)? == zadeh_extend(&f.compose_power(n)?, &u)?, || {
            format!("u = {u:?}, n = {n}")
        });
    }
    Ok(())
}

/// Every non-empty subset of `{0, .., n-1}` as a compactum, indexed by bitmask.
fn all_subsets(space: &GroundSpace, n: usize) -> Vec<Compactum> {
    (1..(1u32 << n))
        .map(|mask| {
            let pts = (0..n).filter(|i| mask & (1 << i) != 0).map(Point::Element).collect();
            Compactum::new(space.clone(), pts).expect("non-empty")
        })
        .collect()
}

fn entourage(rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) -> Result<()> {
    for n in 1..=3usize {
        let space = GroundSpace::finite(FiniteMetric::discrete(n)?);
        let uni = Arc::new(FiniteUniformity::all_reflexive(space.clone())?);
        let subsets = all_subsets(&space, n);
        let m = subsets.len();
        for idx in 0..uni.base().len() {
            let w = EntourageRef::relational(uni.clone(), idx)?;
            let table: Vec<Vec<bool>> = subsets
                .iter()
                .map(|a| subsets.iter().map(|b| k_entourage_contains(&w, a, b).expect("same space")).collect())
                .collect();
            let mask = |i: usize| i + 1;
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        let nested = mask(a) & !mask(b) == 0 && mask(b) & !mask(c) == 0;
                        if nested && table[a][c] {
                            t.record("monotonicity", table[a][b] && table[b][c], || format!("n={n} W#{idx}"));
                        }
                    }
                }
            }
            let pairs: Vec<(usize, usize)> =
                (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).filter(|&(a, b)| table[a][b]).collect();
            for &(a, f) in &pairs {
                for &(g, h) in &pairs {
                    let ag = (mask(a) | mask(g)) - 1;
                    let fh = (mask(f) | mask(h)) - 1;
                    t.record("union law", table[ag][fh], || format!("n={n} W#{idx}"));
                }
            }
        }
    }
    for i in 0..cases {
        let space = if i % 2 == 0 { GroundSpace::UnitInterval } else { GroundSpace::Circle };
        let u = random_fuzzy_set(rng, &space, 4, 6);
        let eps = Rational::new(1, rng.gen_range(1..=1_000_000));
        let own = level_partition(&u, &eps)?;
        let ent = EntourageRef::metric(eps.clone())?;
        t.record("partition post-check", partition_holds(&u, &own, &ent)?, || format!("u = {u:?}"));
        let other = random_fuzzy_set(rng, &space, 4, 6);
        let fine = merge_partitions(&own, &level_partition(&other, &eps)?)?;
        t.record("refinement keeps partition", partition_holds(&u, &fine, &ent)?, || format!("u = {u:?}"));
    }
    Ok(())
}

fn witness(rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) -> Result<()> {
    let tent = DynMap::tent();
    let interval = GroundSpace::UnitInterval;
    let eps_choices = [Rational::new(1, 4), Rational::new(1, 16), Rational::new(1, 64)];
    for i in 0..cases {
        let eps = eps_choices[i % 3].clone();
        let (k, l) = (random_compactum(rng, &interval, 6), random_compactum(rng, &interval, 6));
        let (a, n) = compact_witness(&tent, &k, &l, &eps)?;
        let ok = n >= 1 && hausdorff_distance(&a, &k)? < eps && hausdorff_distance(&a.iterate_image(&tent, n)?, &l)? < eps;
        t.record("compact witness", ok, || format!("K = {k:?}, L = {l:?}, eps = {eps}"));

        let u = random_fuzzy_set(rng, &interval, 4, 6);
        let v = random_fuzzy_set(rng, &interval, 4, 6);
        let c = fuzzy_witness(&tent, &u, &v, &eps)?;
        let end = iterate_fuzzy(&tent, &c.w, c.n)?;
        let ok = c.n >= 1 && d_infty(&u, &c.w)? < eps && d_infty(&end, &v)? < eps;
        t.record("fuzzy witness d_inf", ok, || format!("u = {u:?}, v = {v:?}, eps = {eps}"));
        let ok = d_skorokhod(&u, &c.w)? < eps && d_skorokhod(&end, &v)? < eps;
        t.record("fuzzy witness d_0", ok, || format!("u = {u:?}, v = {v:?}, eps = {eps}"));
        let ok = d_sendo(&u, &c.w)? < eps && d_sendo(&end, &v)? < eps;
        t.record("fuzzy witness d_S", ok, || format!("u = {u:?}, v = {v:?}, eps = {eps}"));
    }
    for _ in 0..cases {
        let k = rng.gen_range(2..=4);
        let pairs: Vec<_> = (0..k)
            .map(|_| {
                let a = rng.gen_range(0..32);
                let b = rng.gen_range(a + 1..=32);
                let c = rng.gen_range(0..32);
                let d = rng.gen_range(c + 1..=32);
                ((Rational::new(a, 32), Rational::new(b, 32)), (Rational::new(c, 32), Rational::new(d, 32)))
            })
            .collect();
        let n = weak_mixing_check(&tent, &pairs)?;
        t.record("weak mixing inclusion", weak_mixing_holds(&tent, &pairs, n)?, || format!("{pairs:?}"));
    }
    let circle = GroundSpace::Circle;
    for i in 0..(cases / 10).max(1) {
        let f = DynMap::rotation(Rational::new(rng.gen_range(1..12), 12));
        let u = random_fuzzy_set(rng, &circle, 3, 4);
        let v = random_fuzzy_set(rng, &circle, 3, 4);
        let e = Rational::new(1, 64);
        if isometry_separation_certificate(&f, &u, &e, &v, &e)?.is_impossible() {
            let kind = [MetricKind::Infty, MetricKind::Skorokhod, MetricKind::Sendo][i % 3];
            let r = empirical_hitting(&f, &u, &e, &v, &e, 200, kind, 4, i as u64)?;
            t.record("certificate never contradicted", !r.found, || format!("u = {u:?}, v = {v:?}"));
        }
        let a = random_fuzzy_set(rng, &circle, 3, 4);
        let b = random_fuzzy_set(rng, &circle, 3, 4);
        let same = d_infty(&zadeh_extend(&f, &a)?, &zadeh_extend(&f, &b)?)? == d_infty(&a, &b)?;
        t.record("isometry keeps d_inf", same, || format!("a = {a:?}, b = {b:?}"));
    }
    Ok(())
}
