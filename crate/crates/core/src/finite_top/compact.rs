//! Compactness by open covers and by the finite intersection property.

use super::point_set::PointSet;
use super::space::FiniteSpace;
use crate::error::{Error, Result};

/// Families larger than this are not swept subfamily by subfamily.
const MAX_SWEEP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub compact: bool,
    /// Finite subcover of the whole family (basis or all opens).
    pub subcover: Vec<PointSet>,
    /// Number of covering subfamilies that were checked individually.
    pub covers_checked: usize,
}

/// Picks, for each point in turn, the first member of `cover` containing it.
pub fn finite_subcover(space: &FiniteSpace, cover: &[PointSet]) -> Result<Vec<PointSet>> {
    for u in cover {
        if !space.is_open(u)? {
            return Err(Error::NotATopology(format!(
                "cover member {{{u}}} is not open"
            )));
        }
    }
    let mut chosen: Vec<PointSet> = Vec::new();
    for x in 0..space.carrier_size() {
        let Some(u) = cover.iter().find(|u| u.contains(x)) else {
            return Err(Error::NotATopology(format!("point {x} is not covered")));
        };
        if !chosen.contains(u) {
            chosen.push(*u);
        }
    }
    Ok(chosen)
}

fn union_all(n: usize, sets: impl Iterator<Item = PointSet>) -> PointSet {
    sets.fold(PointSet::empty(n), |acc, s| acc.union(&s))
}

/// Every open cover drawn from `basis` (or from all opens) has a finite
/// subcover. A basis must consist of opens whose unions give every open.
pub fn is_compact_by_covers(
    space: &FiniteSpace,
    basis: Option<&[PointSet]>,
) -> Result<CoverCertificate> {
    let n = space.carrier_size();
    let family: Vec<PointSet> = match basis {
        Some(b) => {
            for u in b {
                if !space.is_open(u)? {
                    return Err(Error::BasisDoesNotGenerate(format!("{{{u}}} is not open")));
                }
            }
            for u in space.opens() {
                let inside = union_all(n, b.iter().copied().filter(|v| v.is_subset(u)));
                if inside != *u {
                    return Err(Error::BasisDoesNotGenerate(format!(
                        "{{{u}}} is not a union of basis sets"
                    )));
                }
            }
            b.to_vec()
        }
        None => space.opens().to_vec(),
    };

    let full = space.full();
    let mut covers_checked = 0;
    let mut compact = true;
    if family.len() <= MAX_SWEEP {
        for mask in 1u32..1 << family.len() {
            let members: Vec<PointSet> = (0..family.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| family[k])
                .collect();
            if union_all(n, members.iter().copied()) != full {
                continue;
            }
            covers_checked += 1;
            let sub = finite_subcover(space, &members)?;
            compact &= union_all(n, sub.iter().copied()) == full;
        }
    }
    let subcover = finite_subcover(space, &family)?;
    compact &= union_all(n, subcover.iter().copied()) == full;
    Ok(CoverCertificate {
        compact,
        subcover,
        covers_checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FipReport {
    pub compact_by_covers: bool,
    /// Every family of closed sets with the finite intersection property
    /// has nonempty intersection.
    pub closed_fip_property: bool,
    pub families_checked: usize,
}

impl FipReport {
    pub fn holds(&self) -> bool {
        self.compact_by_covers == self.closed_fip_property
    }
}

/// Compares compactness by covers with the closed-family formulation by
/// sweeping every nonempty family of closed sets.
pub fn check_fip_equivalence(space: &FiniteSpace) -> Result<FipReport> {
    let n = space.carrier_size();
    let closed = space.closed_sets();
    let k = closed.len();
    if k > MAX_SWEEP {
        return Err(Error::TooLarge {
            n: k,
            max: MAX_SWEEP,
        });
    }
    let full = space.full();
    // meet[mask] = intersection of the closed sets selected by mask
    let mut meet = vec![full; 1 << k];
    for mask in 1usize..1 << k {
        let low = mask.trailing_zeros() as usize;
        meet[mask] = meet[mask & (mask - 1)].intersection(&closed[low]);
    }
    let mut holds = true;
    let mut families_checked = 0;
    for family in 1usize..1 << k {
        families_checked += 1;
        // walk every nonempty finite subfamily
        let mut sub = family;
        let mut fip = true;
        while sub != 0 {
            if meet[sub].is_empty() {
                fip = false;
                break;
            }
            sub = (sub - 1) & family;
        }
        if fip {
            let all = (0..k)
                .filter(|i| family & (1 << i) != 0)
                .fold(PointSet::full(n), |acc, i| acc.intersection(&closed[i]));
            holds &= !all.is_empty();
        }
    }
    Ok(FipReport {
        compact_by_covers: is_compact_by_covers(space, None)?.compact,
        closed_fip_property: holds,
        families_checked,
    })
}
