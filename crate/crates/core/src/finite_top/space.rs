use std::collections::BTreeSet;

use super::point_set::{PointSet, MAX_CARRIER};
use crate::error::{Error, Result};

/// A topology on `{0, .., n - 1}` given by its explicit family of open sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpace {
    n: usize,
    // Sorted and duplicate-free.
    opens: Vec<PointSet>,
    // minimal_opens[x] = intersection of all opens containing x.
    minimal_opens: Vec<PointSet>,
}

impl FiniteSpace {
    /// Validates the open-set axioms and builds the space.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: n,
                max: MAX_CARRIER,
            });
        }
        let mut family = BTreeSet::new();
        for u in opens {
            u.ensure_carrier(n)?;
            family.insert(u);
        }
        if !family.contains(&PointSet::empty(n)) {
            return Err(Error::NotATopology("empty set is not open".into()));
        }
        if !family.contains(&PointSet::full(n)) {
            return Err(Error::NotATopology("carrier is not open".into()));
        }
        let opens: Vec<PointSet> = family.iter().copied().collect();
        for (i, u) in opens.iter().enumerate() {
            for v in &opens[i + 1..] {
                if !family.contains(&u.intersection(v)) {
                    return Err(Error::NotATopology(format!(
                        "{{{u}}} ∩ {{{v}}} = {{{}}} is missing",
                        u.intersection(v)
                    )));
                }
                if !family.contains(&u.union(v)) {
                    return Err(Error::NotATopology(format!(
                        "{{{u}}} ∪ {{{v}}} = {{{}}} is missing",
                        u.union(v)
                    )));
                }
            }
        }
        Ok(Self::from_sorted_family(n, opens))
    }

    /// The coarsest topology in which every given set is open.
    pub fn generated_by(n: usize, subbase: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let mut sets = Vec::new();
        for s in subbase {
            s.ensure_carrier(n)?;
            sets.push(s);
        }
        // Finite intersections of the subbase form a base.
        let mut base: BTreeSet<PointSet> = BTreeSet::new();
        base.insert(PointSet::full(n));
        for s in &sets {
            let snapshot: Vec<PointSet> = base.iter().copied().collect();
            for b in snapshot {
                base.insert(b.intersection(s));
            }
        }
        Ok(Self::from_base_unchecked(n, base))
    }

    /// Closes a family that is already intersection-closed under unions.
    pub(crate) fn from_base_unchecked(n: usize, base: impl IntoIterator<Item = PointSet>) -> Self {
        let mut family: BTreeSet<PointSet> = BTreeSet::new();
        family.insert(PointSet::empty(n));
        for b in base {
            let snapshot: Vec<PointSet> = family.iter().copied().collect();
            for u in snapshot {
                family.insert(u.union(&b));
            }
        }
        family.insert(PointSet::full(n));
        Self::from_sorted_family(n, family.into_iter().collect())
    }

    fn from_sorted_family(n: usize, opens: Vec<PointSet>) -> Self {
        let minimal_opens = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(PointSet::full(n), |acc, u| acc.intersection(u))
            })
            .collect();
        FiniteSpace {
            n,
            opens,
            minimal_opens,
        }
    }

    pub fn discrete(n: usize) -> Self {
        let opens = PointSet::all_subsets(n).collect();
        Self::from_sorted_family(n, opens)
    }

    pub fn indiscrete(n: usize) -> Self {
        let mut opens = vec![PointSet::empty(n), PointSet::full(n)];
        opens.dedup();
        Self::from_sorted_family(n, opens)
    }

    /// Points `a = 0`, `b = 1`; opens `∅, {a}, {a, b}`.
    pub fn sierpinski() -> Self {
        let a = PointSet::from_bits_unchecked(2, 0b01);
        Self::from_sorted_family(2, vec![PointSet::empty(2), a, PointSet::full(2)])
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<PointSet> = self.opens.iter().map(|u| u.complement()).collect();
        closed.sort();
        closed
    }

    pub(crate) fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::PointOutOfRange {
                point: x,
                size: self.n,
            });
        }
        Ok(())
    }

    /// Open sets containing `x`, in listing order.
    pub fn neighborhoods(&self, x: usize) -> impl Iterator<Item = &PointSet> + '_ {
        self.opens.iter().filter(move |u| u.contains(x))
    }

    /// Membership in the family; also recomputed from the neighbourhood
    /// criterion in debug builds.
    pub fn is_open(&self, a: &PointSet) -> Result<bool> {
        a.ensure_carrier(self.n)?;
        let listed = self.opens.binary_search(a).is_ok();
        debug_assert_eq!(listed, self.is_open_by_neighborhoods_unchecked(a));
        Ok(listed)
    }

    /// Every point of `a` has a neighbourhood contained in `a`.
    pub fn is_open_by_neighborhoods(&self, a: &PointSet) -> Result<bool> {
        a.ensure_carrier(self.n)?;
        Ok(self.is_open_by_neighborhoods_unchecked(a))
    }

    fn is_open_by_neighborhoods_unchecked(&self, a: &PointSet) -> bool {
        a.iter()
            .all(|x| self.neighborhoods(x).any(|u| u.is_subset(a)))
    }

    pub fn is_closed(&self, a: &PointSet) -> Result<bool> {
        self.is_open(&a.complement())
    }

    /// Intersection of all neighbourhoods of `x`; itself open.
    pub fn minimal_open(&self, x: usize) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(self.minimal_opens[x])
    }

    #[inline]
    pub(crate) fn minimal_open_unchecked(&self, x: usize) -> PointSet {
        self.minimal_opens[x]
    }

    pub fn interior(&self, a: &PointSet) -> Result<PointSet> {
        a.ensure_carrier(self.n)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| u.is_subset(a))
            .fold(PointSet::empty(self.n), |acc, u| acc.union(u)))
    }

    pub fn closure(&self, a: &PointSet) -> Result<PointSet> {
        a.ensure_carrier(self.n)?;
        Ok(self
            .opens
            .iter()
            .map(|u| u.complement())
            .filter(|c| a.is_subset(c))
            .fold(PointSet::full(self.n), |acc, c| acc.intersection(&c)))
    }

    /// Every pair of distinct points has disjoint neighbourhoods.
    pub fn is_hausdorff(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.disjoint_neighborhoods(x, y).is_some()))
    }

    /// First pair `(U, V)` of disjoint neighbourhoods of `x` and `y`.
    pub fn disjoint_neighborhoods(&self, x: usize, y: usize) -> Option<(PointSet, PointSet)> {
        self.neighborhoods(x).find_map(|u| {
            self.neighborhoods(y)
                .find(|v| u.is_disjoint(v))
                .map(|v| (*u, *v))
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.n
    }
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSpace({}; ", self.n)?;
        let mut first = true;
        for u in &self.opens {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{{{u}}}")?;
            first = false;
        }
        f.write_str(")")
    }
}

/// A function between finite carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMap {
    domain_size: usize,
    codomain_size: usize,
    values: Vec<usize>,
}

impl PointMap {
    pub fn new(codomain_size: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v >= codomain_size) {
            return Err(Error::PointOutOfRange {
                point: bad,
                size: codomain_size,
            });
        }
        Ok(PointMap {
            domain_size: values.len(),
            codomain_size,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        PointMap {
            domain_size: n,
            codomain_size: n,
            values: (0..n).collect(),
        }
    }

    pub fn constant(domain_size: usize, codomain_size: usize, value: usize) -> Result<Self> {
        Self::new(codomain_size, vec![value; domain_size])
    }

    /// All `m^n` maps from an `n`-point to an `m`-point carrier, in
    /// lexicographic order of their value lists.
    pub fn all_maps(n: usize, m: usize) -> impl Iterator<Item = PointMap> {
        let total = if m == 0 && n > 0 { 0 } else { m.pow(n as u32) };
        (0..total).map(move |mut k| {
            let mut values = vec![0; n];
            for slot in values.iter_mut().rev() {
                *slot = k % m;
                k /= m;
            }
            PointMap {
                domain_size: n,
                codomain_size: m,
                values,
            }
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn preimage(&self, b: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.domain_size);
        for (x, &y) in self.values.iter().enumerate() {
            if b.contains(y) {
                out = out.union(&PointSet::from_bits_unchecked(self.domain_size, 1 << x));
            }
        }
        out
    }

    pub fn image(&self, a: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.codomain_size);
        for x in a.iter() {
            out = out.union(&PointSet::from_bits_unchecked(
                self.codomain_size,
                1 << self.values[x],
            ));
        }
        out
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&PointSet::full(self.domain_size)).is_full()
    }

    fn check_spaces(&self, from: &FiniteSpace, to: &FiniteSpace) -> Result<()> {
        if from.carrier_size() != self.domain_size {
            return Err(Error::CarrierMismatch {
                expected: self.domain_size,
                found: from.carrier_size(),
            });
        }
        if to.carrier_size() != self.codomain_size {
            return Err(Error::CarrierMismatch {
                expected: self.codomain_size,
                found: to.carrier_size(),
            });
        }
        Ok(())
    }

    /// First open set of `to` whose preimage is not open in `from`.
    pub fn discontinuity(&self, from: &FiniteSpace, to: &FiniteSpace) -> Result<Option<PointSet>> {
        self.check_spaces(from, to)?;
        for u in to.opens() {
            if !from.is_open(&self.preimage(u))? {
                return Ok(Some(*u));
            }
        }
        Ok(None)
    }

    /// Continuity by preimages of open sets.
    pub fn is_continuous(&self, from: &FiniteSpace, to: &FiniteSpace) -> Result<bool> {
        Ok(self.discontinuity(from, to)?.is_none())
    }
}

/// A partition of the carrier into nonempty disjoint blocks, listed in
/// order of their smallest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<PointSet>,
}

impl Partition {
    pub fn new(n: usize, blocks: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let mut seen = PointSet::empty(n);
        let mut out = Vec::new();
        for b in blocks {
            b.ensure_carrier(n)
                .map_err(|e| Error::InvalidPartition(e.to_string()))?;
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(&seen) {
                return Err(Error::InvalidPartition(format!(
                    "block {{{b}}} overlaps an earlier block"
                )));
            }
            seen = seen.union(&b);
            out.push(b);
        }
        if !seen.is_full() {
            return Err(Error::InvalidPartition(format!(
                "points {{{}}} are not covered",
                seen.complement()
            )));
        }
        out.sort_by_key(|b| b.first());
        Ok(Partition { n, blocks: out })
    }

    /// `labels[x]` names the block of `x`; equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut blocks: Vec<(usize, PointSet)> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(label, _)| *label == l) {
                Some((_, b)) => b.insert(x)?,
                None => blocks.push((l, PointSet::singleton(n, x)?)),
            }
        }
        Self::new(n, blocks.into_iter().map(|(_, b)| b))
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n)
                .map(|x| PointSet::from_bits_unchecked(n, 1 << x))
                .collect(),
        }
    }

    /// Every partition of an `n`-point carrier, via restricted growth
    /// strings.
    pub fn all(n: usize) -> Vec<Partition> {
        fn grow(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Partition>) {
            if labels.len() == n {
                out.push(Partition::from_labels(labels).expect("labels form a partition"));
                return;
            }
            for l in 0..=max + 1 {
                labels.push(l);
                grow(labels, max.max(l), n, out);
                labels.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(Partition {
                n: 0,
                blocks: vec![],
            });
            return out;
        }
        let mut labels = vec![0];
        grow(&mut labels, 0, n, &mut out);
        out
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    /// The projection onto block indices.
    pub fn projection(&self) -> PointMap {
        let mut values = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for x in b.iter() {
                values[x] = i;
            }
        }
        PointMap {
            domain_size: self.n,
            codomain_size: self.blocks.len(),
            values,
        }
    }
}
