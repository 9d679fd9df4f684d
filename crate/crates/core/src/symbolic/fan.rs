//! The sequential fan: countably many copies of `ω+1` with their limit
//! points glued into one apex.
//!
//! Spoke points `(i, n)` are isolated. A set containing the apex is open
//! iff it contains all but finitely many points of every spoke. Sequences
//! meet only finitely many points of any spoke eventually, or run along
//! one spoke, so limits depend only on the tail value set and eventually
//! periodic presentations suffice.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A finite or cofinite set of naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NatSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl NatSet {
    pub fn all() -> Self {
        NatSet::Cofinite(BTreeSet::new())
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            NatSet::Finite(s) => s.contains(&n),
            NatSet::Cofinite(s) => !s.contains(&n),
        }
    }

    pub fn is_cofinite(&self) -> bool {
        matches!(self, NatSet::Cofinite(_))
    }

    pub fn least(&self) -> Option<u64> {
        match self {
            NatSet::Finite(s) => s.first().copied(),
            NatSet::Cofinite(s) => (0..).find(|n| !s.contains(n)),
        }
    }
}

/// A subset of the fan: whether it holds the apex, and its trace on each
/// spoke (`default` for spokes not listed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanSet {
    pub apex: bool,
    pub exceptional: BTreeMap<usize, NatSet>,
    pub default: NatSet,
}

impl FanSet {
    pub fn full() -> Self {
        FanSet {
            apex: true,
            exceptional: BTreeMap::new(),
            default: NatSet::all(),
        }
    }

    pub fn spoke(&self, i: usize) -> &NatSet {
        self.exceptional.get(&i).unwrap_or(&self.default)
    }

    pub fn contains_point(&self, spoke: usize, n: u64) -> bool {
        self.spoke(spoke).contains(n)
    }
}

pub fn fan_is_open(d: &FanSet) -> bool {
    !d.apex || (d.default.is_cofinite() && d.exceptional.values().all(NatSet::is_cofinite))
}

/// An open neighbourhood of the apex containing none of the candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanDefeat {
    pub neighborhood: FanSet,
    /// For candidate `i`: the point `(i, n)` it holds and the
    /// neighbourhood omits.
    pub omitted: Vec<(usize, u64)>,
}

impl FanDefeat {
    /// Re-checks the neighbourhood and each omitted point.
    pub fn verify(&self, candidates: &[FanSet]) -> bool {
        fan_is_open(&self.neighborhood)
            && self.neighborhood.apex
            && candidates.len() == self.omitted.len()
            && candidates.iter().zip(&self.omitted).all(|(c, &(i, n))| {
                c.contains_point(i, n) && !self.neighborhood.contains_point(i, n)
            })
    }
}

/// On spoke `i` drop the least point candidate `i` keeps there. No finite
/// family of apex neighbourhoods is a basis at the apex.
pub fn fan_defeat_basis(candidates: &[FanSet]) -> Result<FanDefeat> {
    let mut exceptional = BTreeMap::new();
    let mut omitted = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if !c.apex {
            return Err(Error::InvalidCandidate {
                index: i,
                reason: "does not contain the apex".into(),
            });
        }
        if !fan_is_open(c) {
            return Err(Error::InvalidCandidate {
                index: i,
                reason: "not open".into(),
            });
        }
        let n = c.spoke(i).least().expect("cofinite traces are nonempty");
        exceptional.insert(i, NatSet::Cofinite([n].into()));
        omitted.push((i, n));
    }
    let out = FanDefeat {
        neighborhood: FanSet {
            apex: true,
            exceptional,
            default: NatSet::all(),
        },
        omitted,
    };
    debug_assert!(out.verify(candidates));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cof(xs: &[u64]) -> NatSet {
        NatSet::Cofinite(xs.iter().copied().collect())
    }

    #[test]
    fn openness() {
        let isolated = FanSet {
            apex: false,
            exceptional: BTreeMap::new(),
            default: NatSet::Finite([1, 2].into()),
        };
        assert!(fan_is_open(&isolated));
        assert!(fan_is_open(&FanSet::full()));
        let mut bad = FanSet::full();
        bad.exceptional.insert(0, NatSet::Finite([0].into()));
        assert!(!fan_is_open(&bad));
    }

    #[test]
    fn defeat_examples() {
        let one = [FanSet::full()];
        let d = fan_defeat_basis(&one).unwrap();
        assert_eq!(d.omitted, vec![(0, 0)]);
        assert!(d.verify(&one));

        let mut second = FanSet::full();
        second.exceptional.insert(1, cof(&[0, 1]));
        let two = [FanSet::full(), second];
        let d = fan_defeat_basis(&two).unwrap();
        assert_eq!(d.omitted, vec![(0, 0), (1, 2)]);
        assert!(d.verify(&two));

        let none = fan_defeat_basis(&[]).unwrap();
        assert_eq!(none.neighborhood, FanSet::full());
    }

    #[test]
    fn rejects_bad_candidates() {
        let mut c = FanSet::full();
        c.apex = false;
        assert!(fan_defeat_basis(&[c]).is_err());
        let mut c = FanSet::full();
        c.default = NatSet::Finite(BTreeSet::new());
        assert!(matches!(
            fan_defeat_basis(&[FanSet::full(), c]),
            Err(Error::InvalidCandidate { index: 1, .. })
        ));
    }
}
