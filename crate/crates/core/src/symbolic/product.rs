//! Pointwise limits in `{0,1}^I`, with points written as the finite sets
//! of coordinates equal to 1.
//!
//! A coordinate converges iff it is eventually constant, which for an
//! eventually periodic sequence means constant along the cycle.
//!
//! The space itself is indexed by a rational interval. Its subsets are
//! given either as finite unions of basic cylinders or as finite sets of
//! points.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cc::{Atom, SetDescriptor};
use crate::error::{Error, Result};
use crate::sequences::EpSequence;

/// The half-open interval `[lo, hi)` with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidDescriptor(format!(
                "empty interval [{lo}, {hi})"
            )));
        }
        Ok(RationalInterval { lo, hi })
    }

    /// `[0, 1)`.
    pub fn unit() -> Self {
        RationalInterval {
            lo: BigRational::zero(),
            hi: BigRational::one(),
        }
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        &self.lo <= r && r < &self.hi
    }
}

/// A subset of `{0,1}^I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductSet {
    /// Union of cylinders, each fixing finitely many coordinates.
    Cylinders(Vec<BTreeMap<BigRational, bool>>),
    /// Finitely many points, each written as its set of coordinates equal
    /// to 1.
    Points(Vec<BTreeSet<BigRational>>),
}

/// Cylinders are open. A nonempty finite set of points never is: a basic
/// neighbourhood fixes finitely many of the infinitely many coordinates.
pub fn product_is_open(index: &RationalInterval, a: &ProductSet) -> Result<bool> {
    let coords: Vec<&BigRational> = match a {
        ProductSet::Cylinders(cs) => cs.iter().flat_map(|c| c.keys()).collect(),
        ProductSet::Points(ps) => ps.iter().flatten().collect(),
    };
    if let Some(r) = coords.into_iter().find(|r| !index.contains(r)) {
        return Err(Error::InvalidDescriptor(format!(
            "coordinate {r} outside the index interval"
        )));
    }
    Ok(match a {
        ProductSet::Cylinders(_) => true,
        ProductSet::Points(ps) => ps.is_empty(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointwiseLimit {
    Converges(BTreeSet<Atom>),
    /// The coordinate is 1 on some cycle terms and 0 on others.
    Diverges {
        atom: Atom,
    },
}

fn atoms(d: &SetDescriptor) -> Result<BTreeSet<Atom>> {
    match d {
        SetDescriptor::Empty => Ok(BTreeSet::new()),
        SetDescriptor::Finite(s) => Ok(s.clone()),
        other => Err(Error::InvalidDescriptor(format!(
            "pointwise limits need finite sets, got {other}"
        ))),
    }
}

pub fn product_pointwise_limit(s: &EpSequence<SetDescriptor>) -> Result<PointwiseLimit> {
    for d in s.values() {
        atoms(d)?;
    }
    let cycle: Vec<BTreeSet<Atom>> = s.cycle().iter().map(atoms).collect::<Result<_>>()?;
    let union: BTreeSet<Atom> = cycle.iter().flatten().cloned().collect();
    for a in &union {
        if !cycle.iter().all(|c| c.contains(a)) {
            return Ok(PointwiseLimit::Diverges { atom: a.clone() });
        }
    }
    Ok(PointwiseLimit::Converges(union))
}

/// `∪ terms`, prefix and cycle.
pub fn union_of_terms(s: &EpSequence<SetDescriptor>) -> Result<BTreeSet<Atom>> {
    let mut out = BTreeSet::new();
    for d in s.values() {
        out.extend(atoms(d)?);
    }
    Ok(out)
}

/// The limit of a sequence of countable sets is finite and inside the
/// union of the terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCertificate {
    pub limit: PointwiseLimit,
    pub union: BTreeSet<Atom>,
}

impl ProductCertificate {
    pub fn holds(&self) -> bool {
        match &self.limit {
            PointwiseLimit::Converges(l) => l.is_subset(&self.union),
            PointwiseLimit::Diverges { .. } => true,
        }
    }
}

pub fn product_certificate(s: &EpSequence<SetDescriptor>) -> Result<ProductCertificate> {
    Ok(ProductCertificate {
        limit: product_pointwise_limit(s)?,
        union: union_of_terms(s)?,
    })
}
