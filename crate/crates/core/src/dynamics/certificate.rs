use serde::Serialize;

use crate::compacta::{k_entourage_contains, Compactum, EntourageRef};
use crate::error::{Error, Result};
use crate::fuzzy::StepFuzzySet;
use crate::ground::DynMap;
use crate::rational::Rational;

/// Outcome of the diameter test. `gap` is `|diam(u_1) - diam(v_1)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Separation {
    CertifiedImpossible { gap: Rational },
    Inconclusive { gap: Rational },
}

impl Separation {
    pub fn is_impossible(&self) -> bool {
        matches!(self, Separation::CertifiedImpossible { .. })
    }
}

/// Proves that no `w` with `d_∞(u, w) < ε_u` has an iterate with
/// `d_∞(f̂ⁿ(w), v) < ε_v`, when it can.
///
/// An isometry keeps the diameter of every cut, and diameters move by at
/// most twice the Hausdorff distance, so top-cut diameters that differ by
/// more than `2ε_u + 2ε_v` can never be reconciled.
pub fn isometry_separation_certificate(
    f: &DynMap,
    u: &StepFuzzySet,
    eps_u: &Rational,
    v: &StepFuzzySet,
    eps_v: &Rational,
) -> Result<Separation> {
    if !f.is_isometry() {
        return Err(Error::NotIsometry);
    }
    if !eps_u.is_positive() || !eps_v.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    if u.space() != v.space() || f.space() != u.space() {
        return Err(Error::SpaceMismatch);
    }
    let gap = (u.top_cut().diameter() - v.top_cut().diameter()).abs();
    let bound = Rational::from_integer(2) * (eps_u + eps_v);
    Ok(if gap > bound { Separation::CertifiedImpossible { gap } } else { Separation::Inconclusive { gap } })
}

/// Crisp sets read off a fuzzy orbit: `A = w_0`, with whether
/// `(A, K) ∈ K[V_ε]` and `(fⁿ(A), L) ∈ K[V_ε]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub a: Compactum,
    pub near_source: bool,
    pub near_target: bool,
}

pub fn sendograph_to_hyperspace(
    f: &DynMap,
    k: &Compactum,
    l: &Compactum,
    w: &StepFuzzySet,
    n: usize,
    eps: &Rational,
) -> Result<Extraction> {
    let ent = EntourageRef::metric(eps.clone())?;
    let a = w.support().clone();
    let near_source = k_entourage_contains(&ent, &a, k)?;
    let near_target = k_entourage_contains(&ent, &a.iterate_image(f, n)?, l)?;
    Ok(Extraction { a, near_source, near_target })
}
