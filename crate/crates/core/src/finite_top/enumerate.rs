use super::point_set::PointSet;
use super::space::FiniteSpace;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION: usize = 4;

/// Every topology on `{0, .., n - 1}` (as distinct families, not up to
/// homeomorphism), sorted.
///
/// Candidate families are all sets of subsets containing `∅` and the
/// carrier; each is kept iff it is closed under pairwise union and
/// intersection.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > MAX_ENUMERATION {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION,
        });
    }
    let subsets = 1usize << n;
    let full = subsets - 1;
    // Proper nonempty subsets are the free choices.
    let middle: Vec<usize> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u32..1 << middle.len() {
        // family as a bitmask over subset masks
        let mut family: u32 = 1 | 1 << full;
        for (k, &s) in middle.iter().enumerate() {
            if choice & (1 << k) != 0 {
                family |= 1 << s;
            }
        }
        if is_closed_family(family, subsets) {
            let opens = (0..subsets)
                .filter(|s| family & (1 << s) != 0)
                .map(|s| PointSet::from_bits_unchecked(n, s as u64));
            out.push(FiniteSpace::new(n, opens.collect::<Vec<_>>())?);
        }
    }
    out.sort();
    Ok(out)
}

fn is_closed_family(family: u32, subsets: usize) -> bool {
    for u in 0..subsets {
        if family & (1 << u) == 0 {
            continue;
        }
        for v in u + 1..subsets {
            if family & (1 << v) == 0 {
                continue;
            }
            if family & (1 << (u & v)) == 0 || family & (1 << (u | v)) == 0 {
                return false;
            }
        }
    }
    true
}
