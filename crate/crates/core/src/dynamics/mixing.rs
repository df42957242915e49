use crate::error::{Error, Result};
use crate::ground::{DynMap, Window};
use crate::rational::Rational;

/// A common iterate `n` with `fⁿ(U_i) ⊇ V_i` for every pair. For the
/// expanding maps with an oracle this is the slowest cover time of the `U_i`.
pub fn weak_mixing_check(f: &DynMap, pairs: &[((Rational, Rational), (Rational, Rational))]) -> Result<u32> {
    if !f.has_mixing_oracle() {
        return Err(Error::NoMixingOracle);
    }
    if pairs.len() < 2 {
        return Err(Error::InvalidArgument("weak mixing needs at least two pairs".into()));
    }
    let mut n = 0;
    for ((lo, hi), (vlo, vhi)) in pairs {
        if vlo >= vhi {
            return Err(Error::EmptyInterval);
        }
        n = n.max(f.interval_cover_time(lo, hi)?);
    }
    Ok(n)
}

/// Whether `fⁿ(U_i) ⊇ V_i` for all pairs, by direct interval iteration.
pub fn weak_mixing_holds(f: &DynMap, pairs: &[((Rational, Rational), (Rational, Rational))], n: u32) -> Result<bool> {
    for ((lo, hi), (vlo, vhi)) in pairs {
        let orbit = f.window_orbit(&Window::interval(lo.clone(), hi.clone()), n as usize)?;
        let image = orbit.last().expect("orbit includes the start");
        if !f.window_includes(image, &Window::interval(vlo.clone(), vhi.clone())) {
            return Ok(false);
        }
    }
    Ok(true)
}
