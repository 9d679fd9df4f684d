//! Product, quotient, subspace and disjoint sum of finite spaces.

use super::point_set::{PointSet, MAX_CARRIER};
use super::space::{FiniteSpace, Partition, PointMap};
use crate::error::{Error, Result};

/// Product topology. The pair `(i, j)` is encoded as `i * |s2| + j`.
pub fn product(s1: &FiniteSpace, s2: &FiniteSpace) -> Result<FiniteSpace> {
    let (n1, n2) = (s1.carrier_size(), s2.carrier_size());
    let n = n1 * n2;
    if n > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size: n,
            max: MAX_CARRIER,
        });
    }
    let mut rectangles = Vec::with_capacity(s1.opens().len() * s2.opens().len());
    for u in s1.opens() {
        for v in s2.opens() {
            rectangles.push(rectangle(n2, u, v));
        }
    }
    Ok(FiniteSpace::from_base_unchecked(n, rectangles))
}

/// `U × V` under the product encoding.
pub fn rectangle(n2: usize, u: &PointSet, v: &PointSet) -> PointSet {
    let mut bits = 0u64;
    for i in u.iter() {
        bits |= v.bits() << (i * n2);
    }
    PointSet::from_bits_unchecked(u.carrier_size() * n2, bits)
}

/// The two coordinate projections of the product carrier.
pub fn projections(n1: usize, n2: usize) -> (PointMap, PointMap) {
    let p1 = (0..n1 * n2).map(|k| k / n2).collect();
    let p2 = (0..n1 * n2).map(|k| k % n2).collect();
    (
        PointMap::new(n1, p1).expect("coordinates in range"),
        PointMap::new(n2, p2).expect("coordinates in range"),
    )
}

/// Quotient by a partition: a set of blocks is open iff its preimage under
/// the projection is open. Returns the quotient and the projection.
pub fn quotient(space: &FiniteSpace, p: &Partition) -> Result<(FiniteSpace, PointMap)> {
    if p.carrier_size() != space.carrier_size() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} points, space has {}",
            p.carrier_size(),
            space.carrier_size()
        )));
    }
    let pi = p.projection();
    let k = p.blocks().len();
    let mut opens = Vec::new();
    for a in PointSet::all_subsets(k) {
        if space.is_open(&pi.preimage(&a))? {
            opens.push(a);
        }
    }
    let q = FiniteSpace::new(k, opens)?;
    Ok((q, pi))
}

/// Subspace on the points of `a`, relabelled `0..|a|` in increasing order.
pub fn subspace(space: &FiniteSpace, a: &PointSet) -> Result<FiniteSpace> {
    a.ensure_carrier(space.carrier_size())?;
    if a.is_empty() {
        return Err(Error::EmptySubspace);
    }
    let points: Vec<usize> = a.iter().collect();
    let m = points.len();
    let traces = space.opens().iter().map(|u| {
        let bits = points
            .iter()
            .enumerate()
            .filter(|(_, &p)| u.contains(p))
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        PointSet::from_bits_unchecked(m, bits)
    });
    FiniteSpace::new(m, traces.collect::<Vec<_>>())
}

/// Disjoint sum; summand `k` occupies a contiguous block of points after
/// summands `0..k`.
pub fn disjoint_sum(spaces: &[FiniteSpace]) -> Result<FiniteSpace> {
    let n: usize = spaces.iter().map(FiniteSpace::carrier_size).sum();
    if n > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size: n,
            max: MAX_CARRIER,
        });
    }
    // Opens are exactly the unions of one open per summand.
    let mut family = vec![PointSet::empty(n)];
    let mut offset = 0;
    for s in spaces {
        let mut next = Vec::with_capacity(family.len() * s.opens().len());
        for acc in &family {
            for u in s.opens() {
                let shifted = PointSet::from_bits_unchecked(n, u.bits() << offset);
                next.push(acc.union(&shifted));
            }
        }
        family = next;
        offset += s.carrier_size();
    }
    FiniteSpace::new(n, family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    /// Unions of every subfamily of rectangles, by brute force over the
    /// `2^r` subfamilies.
    fn product_oracle(s1: &FiniteSpace, s2: &FiniteSpace) -> Vec<u64> {
        let n2 = s2.carrier_size();
        let mut rects = Vec::new();
        for u in s1.opens() {
            for v in s2.opens() {
                let mut bits = 0u64;
                for i in 0..s1.carrier_size() {
                    for j in 0..n2 {
                        if u.contains(i) && v.contains(j) {
                            bits |= 1 << (i * n2 + j);
                        }
                    }
                }
                rects.push(bits);
            }
        }
        let mut out: Vec<u64> = (0..1u64 << rects.len())
            .map(|mask| {
                (0..rects.len())
                    .filter(|r| mask & (1 << r) != 0)
                    .fold(0, |acc, r| acc | rects[r])
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn product_examples() {
        let d2 = FiniteSpace::discrete(2);
        assert_eq!(product(&d2, &d2).unwrap(), FiniteSpace::discrete(4));

        let s = FiniteSpace::sierpinski();
        assert_eq!(product(&s, &FiniteSpace::point()).unwrap(), s);

        let ss = product(&s, &s).unwrap();
        let oracle = product_oracle(&s, &s);
        // 9 rectangles U×V, but only 6 distinct unions
        assert_eq!(oracle.len(), 6);
        let mut got: Vec<u64> = ss.opens().iter().map(|u| u.bits()).collect();
        got.sort();
        assert_eq!(got, oracle);
    }

    #[test]
    fn quotient_examples() {
        let whole = |n| Partition::new(n, [PointSet::full(n)]).unwrap();
        let (q, pi) = quotient(&FiniteSpace::discrete(2), &whole(2)).unwrap();
        assert_eq!(q, FiniteSpace::point());
        assert_eq!(pi.values(), &[0, 0]);
        let (q, _) = quotient(&FiniteSpace::sierpinski(), &whole(2)).unwrap();
        assert_eq!(q, FiniteSpace::point());

        let p = Partition::new(3, [set(3, &[0, 1]), set(3, &[2])]).unwrap();
        let (q, pi) = quotient(&FiniteSpace::discrete(3), &p).unwrap();
        // both singleton candidates pull back to open sets of the discrete space
        assert!(FiniteSpace::discrete(3)
            .is_open(&pi.preimage(&set(2, &[0])))
            .unwrap());
        assert!(FiniteSpace::discrete(3)
            .is_open(&pi.preimage(&set(2, &[1])))
            .unwrap());
        assert_eq!(q, FiniteSpace::discrete(2));
    }

    #[test]
    fn subspace_and_sum_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(subspace(&s, &set(2, &[1])).unwrap(), FiniteSpace::point());
        assert!(matches!(
            subspace(&s, &PointSet::empty(2)),
            Err(Error::EmptySubspace)
        ));
        let p = FiniteSpace::point();
        assert_eq!(
            disjoint_sum(&[p.clone(), p]).unwrap(),
            FiniteSpace::discrete(2)
        );
        // diagonal of S×S is {(a,a), (b,b)} = {0, 3}
        let ss = product(&s, &s).unwrap();
        assert_eq!(subspace(&ss, &set(4, &[0, 3])).unwrap(), s);
    }

    #[test]
    fn sum_with_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let sum = disjoint_sum(&[s.clone(), FiniteSpace::point()]).unwrap();
        assert_eq!(sum.opens().len(), 6);
        assert!(sum.is_open(&set(3, &[2])).unwrap());
        assert!(!sum.is_open(&set(3, &[1, 2])).unwrap());
    }
}
