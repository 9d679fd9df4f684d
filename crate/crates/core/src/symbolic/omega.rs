//! The convergent-sequence space `ω+1 = {0, 1, 2, …} ∪ {∞}`, homeomorphic
//! to `{0} ∪ {1/(n+1)}` with `∞ ↔ 0`.
//!
//! Natural numbers are isolated; the neighbourhoods of `∞` are the
//! cofinite sets containing it. Subsets are described by an eventually
//! periodic indicator on the naturals, which includes the finite and
//! cofinite sets and is closed under the preimages the Franklin
//! construction takes.

use std::fmt;

use crate::sequences::EpSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaPoint {
    Nat(usize),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSet {
    pub infinity: bool,
    /// `naturals.get(n)` tells whether `n` is a member.
    pub naturals: EpSequence<bool>,
}

impl OmegaSet {
    pub fn finite(naturals: impl IntoIterator<Item = usize>, infinity: bool) -> Self {
        Self::listed(naturals, infinity, false)
    }

    /// Every natural except the listed ones.
    pub fn cofinite(excluded: impl IntoIterator<Item = usize>, infinity: bool) -> Self {
        Self::listed(excluded, infinity, true)
    }

    fn listed(points: impl IntoIterator<Item = usize>, infinity: bool, default: bool) -> Self {
        let points: Vec<usize> = points.into_iter().collect();
        let len = points.iter().max().map_or(0, |m| m + 1);
        let mut prefix = vec![default; len];
        for p in points {
            prefix[p] = !default;
        }
        OmegaSet {
            infinity,
            naturals: EpSequence::new(prefix, vec![default]).expect("nonempty"),
        }
    }

    pub fn contains(&self, p: OmegaPoint) -> bool {
        match p {
            OmegaPoint::Infinity => self.infinity,
            OmegaPoint::Nat(n) => *self.naturals.get(n),
        }
    }

    /// Contains all but finitely many naturals.
    pub fn is_cofinite(&self) -> bool {
        self.naturals.cycle().iter().all(|&b| b)
    }
}

impl fmt::Display for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: &bool| if *b { '1' } else { '0' };
        let pre: String = self.naturals.prefix().iter().map(bit).collect();
        let cyc: String = self.naturals.cycle().iter().map(bit).collect();
        write!(f, "{}{pre}({cyc})*", if self.infinity { "∞;" } else { "" })
    }
}

/// Open iff `∞` is absent or all but finitely many naturals are present.
pub fn omega_plus_one_is_open(d: &OmegaSet) -> bool {
    !d.infinity || d.is_cofinite()
}
