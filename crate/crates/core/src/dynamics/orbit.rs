use crate::error::Result;
use crate::fuzzy::{zadeh_extend, StepFuzzySet};
use crate::ground::DynMap;

/// `[u, f̂(u), .., f̂ⁿ(u)]`.
pub fn orbit_fuzzy(f: &DynMap, u: &StepFuzzySet, n: usize) -> Result<Vec<StepFuzzySet>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(u.clone());
    for _ in 0..n {
        let next = zadeh_extend(f, out.last().expect("non-empty"))?;
        out.push(next);
    }
    Ok(out)
}

/// `f̂ⁿ(u)` without keeping the intermediate steps.
pub fn iterate_fuzzy(f: &DynMap, u: &StepFuzzySet, n: usize) -> Result<StepFuzzySet> {
    let mut cur = u.clone();
    for _ in 0..n {
        cur = zadeh_extend(f, &cur)?;
    }
    Ok(cur)
}
