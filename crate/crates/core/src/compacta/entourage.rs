//! Entourages of the diagonal and the induced hyperspace entourages.

use std::sync::Arc;

use crate::compacta::compactum::{hausdorff_unchecked, Compactum};
use crate::error::{Error, Result};
use crate::ground::{GroundSpace, Point};
use crate::rational::Rational;

/// A relation on `{0, .., n-1}`, i.e. a subset of `X x X`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn diagonal(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = Relation::empty(n);
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidUniformity(format!("pair ({a},{b}) outside a space of size {n}")));
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Relation whose pairs are read from the low `n*n` bits of `mask`,
    /// row-major.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let bits = (0..n * n).map(|k| mask >> k & 1 == 1).collect();
        Relation { n, bits }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.n + b] = true;
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn contains_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        Relation { n: self.n, bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect() }
    }

    pub fn inverse(&self) -> Relation {
        let mut r = Relation::empty(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                if self.contains(a, b) {
                    r.insert(b, a);
                }
            }
        }
        r
    }

    /// `self ∘ other = {(x,y) : (x,z) in self and (z,y) in other for some z}`.
    pub fn compose(&self, other: &Relation) -> Relation {
        let mut r = Relation::empty(self.n);
        for x in 0..self.n {
            for z in 0..self.n {
                if !self.contains(x, z) {
                    continue;
                }
                for y in 0..self.n {
                    if other.contains(z, y) {
                        r.insert(x, y);
                    }
                }
            }
        }
        r
    }
}

/// A base of entourages for a uniformity on a finite space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteUniformity {
    space: GroundSpace,
    base: Vec<Relation>,
}

impl FiniteUniformity {
    /// Checks that every relation contains the diagonal and that the family
    /// satisfies the four base axioms.
    pub fn new(space: GroundSpace, base: Vec<Relation>) -> Result<Self> {
        let GroundSpace::Finite(metric) = &space else {
            return Err(Error::InvalidUniformity("relational uniformities live on finite spaces".into()));
        };
        let n = metric.len();
        if base.is_empty() {
            return Err(Error::InvalidUniformity("base must be non-empty".into()));
        }
        if let Some(r) = base.iter().find(|r| r.size() != n) {
            return Err(Error::InvalidUniformity(format!("relation on {} elements, space has {n}", r.size())));
        }
        if base.iter().any(|r| !r.contains_diagonal()) {
            return Err(Error::InvalidUniformity("every entourage contains the diagonal".into()));
        }
        // With the diagonal present (BS1)-(BS4) hold for any family of
        // reflexive relations. On a finite set the converse holds as well,
        // so the checks below only run to name the failing axiom.
        let diagonal = Relation::diagonal(n);
        if base.contains(&diagonal) {
            return Ok(FiniteUniformity { space, base });
        }
        // (BS1) intersections contain a base member
        for a in &base {
            for b in &base {
                let ab = a.intersection(b);
                if !base.iter().any(|c| c.is_subset(&ab)) {
                    return Err(Error::InvalidUniformity("no base member inside an intersection (BS1)".into()));
                }
            }
        }
        // (BS2) inverses
        for a in &base {
            if !base.iter().any(|b| b.inverse().is_subset(a)) {
                return Err(Error::InvalidUniformity("no base member with inverse inside an entourage (BS2)".into()));
            }
        }
        // (BS3) square roots
        for a in &base {
            if !base.iter().any(|b| b.compose(b).is_subset(a)) {
                return Err(Error::InvalidUniformity("no base member whose square fits an entourage (BS3)".into()));
            }
        }
        // (BS4) the intersection of the base is the diagonal
        let meet = base.iter().skip(1).fold(base[0].clone(), |acc, r| acc.intersection(r));
        if meet != diagonal {
            return Err(Error::InvalidUniformity("base does not separate points (BS4)".into()));
        }
        Ok(FiniteUniformity { space, base })
    }

    /// Base of all reflexive relations on the space (the discrete uniformity).
    pub fn all_reflexive(space: GroundSpace) -> Result<Self> {
        let n = match &space {
            GroundSpace::Finite(m) => m.len(),
            _ => return Err(Error::InvalidUniformity("relational uniformities live on finite spaces".into())),
        };
        if n * n > 20 {
            return Err(Error::InvalidUniformity("too many relations to enumerate".into()));
        }
        let base = (0u64..1 << (n * n))
            .map(|m| Relation::from_mask(n, m))
            .filter(Relation::contains_diagonal)
            .collect();
        FiniteUniformity::new(space, base)
    }

    pub fn space(&self) -> &GroundSpace {
        &self.space
    }

    pub fn base(&self) -> &[Relation] {
        &self.base
    }
}

/// Reference to an entourage: the metric ball relation `V_eps` or a member
/// of a finite uniformity base.
#[derive(Clone, Debug)]
pub enum EntourageRef {
    Metric(Rational),
    Relational(Arc<FiniteUniformity>, usize),
}

impl EntourageRef {
    pub fn metric(eps: Rational) -> Result<Self> {
        if !eps.is_positive() {
            return Err(Error::NonPositiveEpsilon);
        }
        Ok(EntourageRef::Metric(eps))
    }

    pub fn relational(uniformity: Arc<FiniteUniformity>, index: usize) -> Result<Self> {
        if index >= uniformity.base.len() {
            return Err(Error::InvalidUniformity(format!("no base relation {index}")));
        }
        Ok(EntourageRef::Relational(uniformity, index))
    }

    fn relation(&self) -> Option<(&FiniteUniformity, &Relation)> {
        match self {
            EntourageRef::Relational(u, i) => Some((u, &u.base[*i])),
            EntourageRef::Metric(_) => None,
        }
    }
}

/// The set `U(A) = ⋃_{a in A} U(a)`, as a membership predicate.
pub struct EntourageImage<'a> {
    entourage: &'a EntourageRef,
    set: &'a Compactum,
}

impl EntourageImage<'_> {
    pub fn contains(&self, y: &Point) -> bool {
        let space = self.set.space();
        if !space.contains(y) {
            return false;
        }
        match self.entourage {
            EntourageRef::Metric(eps) => &self.set.dist_to(y) < eps,
            EntourageRef::Relational(u, i) => {
                let rel = &u.base[*i];
                let Point::Element(yi) = y else { return false };
                self.set.points().iter().any(|a| matches!(a, Point::Element(ai) if rel.contains(*ai, *yi)))
            }
        }
    }
}

/// Membership predicate for `U(A)`.
pub fn entourage_image<'a>(u: &'a EntourageRef, a: &'a Compactum) -> Result<EntourageImage<'a>> {
    if let Some((unif, _)) = u.relation() {
        if unif.space() != a.space() {
            return Err(Error::RelationalUnsupported);
        }
    }
    Ok(EntourageImage { entourage: u, set: a })
}

/// Whether `(A, B)` belongs to the hyperspace entourage `K[U]`, i.e.
/// `A ⊆ U(B)` and `B ⊆ U(A)`.
///
/// For metric entourages this is `d_H(A, B) < eps`.
pub fn k_entourage_contains(u: &EntourageRef, a: &Compactum, b: &Compactum) -> Result<bool> {
    a.same_space(b)?;
    match u {
        EntourageRef::Metric(eps) => Ok(&hausdorff_unchecked(a, b) < eps),
        EntourageRef::Relational(..) => {
            let ub = entourage_image(u, b)?;
            let ua = entourage_image(u, a)?;
            Ok(a.points().iter().all(|p| ub.contains(p)) && b.points().iter().all(|p| ua.contains(p)))
        }
    }
}
