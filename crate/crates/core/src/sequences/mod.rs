//! Sequences on finite spaces: limits, sequential openness, the tail
//! lemma, first-countability witnesses and the sequential coreflection.

mod ep;

pub use ep::EpSequence;

use crate::error::{Error, Result};
use crate::finite_top::{FiniteSpace, PointMap, PointSet};

/// The set of values occurring infinitely often.
pub fn cycle_set(s: &EpSequence, n: usize) -> Result<PointSet> {
    for &v in s.values() {
        if v >= n {
            return Err(Error::PointOutOfRange { point: v, size: n });
        }
    }
    PointSet::from_points(n, s.cycle().iter().copied())
}

/// `y` is a limit iff every neighbourhood of `y` contains every cycle value.
pub fn seq_limits(s: &EpSequence, space: &FiniteSpace) -> Result<PointSet> {
    let n = space.carrier_size();
    let tail = cycle_set(s, n)?;
    let mut out = PointSet::empty(n);
    for y in 0..n {
        if space.neighborhoods(y).all(|u| tail.is_subset(u)) {
            out.insert(y)?;
        }
    }
    Ok(out)
}

/// One sequence per nonempty subset `S` of `within`, cycling through `S` in
/// increasing order. Limits depend only on the cycle set, so these cover
/// every possible limit behaviour of sequences valued in `within`.
pub fn tail_classes(within: &PointSet) -> Vec<EpSequence> {
    let n = within.carrier_size();
    PointSet::all_subsets(n)
        .filter(|s| !s.is_empty() && s.is_subset(within))
        .map(|s| EpSequence::new(vec![], s.iter().collect()).expect("nonempty cycle"))
        .collect()
}

/// A sequence with values outside a set and a limit inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWitness {
    pub sequence: EpSequence,
    pub limit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentialOpenness {
    pub sequentially_open: bool,
    pub witness: Option<SequenceWitness>,
}

/// Decides whether no sequence in `X \ a` has a limit in `a`.
///
/// The decision uses the minimal-open criterion: `a` fails iff some `y ∈ a`
/// has `minimal_open(y)` meeting the complement, in which case the
/// constant sequence at the smallest such point converges to `y`. The
/// verdict is cross-checked against every tail class in the complement.
pub fn is_sequentially_open(space: &FiniteSpace, a: &PointSet) -> Result<SequentialOpenness> {
    a.ensure_carrier(space.carrier_size())?;
    let outside = a.complement();
    let mut witness = None;
    for y in a.iter() {
        if let Some(v) = space
            .minimal_open_unchecked(y)
            .intersection(&outside)
            .first()
        {
            witness = Some(SequenceWitness {
                sequence: EpSequence::constant(v),
                limit: y,
            });
            break;
        }
    }
    let enumerated = tail_classes(&outside)
        .iter()
        .map(|s| seq_limits(s, space))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|lim| lim.is_disjoint(a));
    assert_eq!(
        witness.is_none(),
        enumerated,
        "minimal-open criterion disagrees with tail enumeration for {a:?} in {space:?}"
    );
    Ok(SequentialOpenness {
        sequentially_open: witness.is_none(),
        witness,
    })
}

/// Open and sequentially open coincide on every subset.
pub fn is_sequential(space: &FiniteSpace) -> Result<bool> {
    for a in PointSet::all_subsets(space.carrier_size()) {
        if space.is_open(&a)? != is_sequentially_open(space, &a)?.sequentially_open {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailLemmaCheck {
    pub sequentially_open: bool,
    /// Every sequence with a limit in `a` eventually stays in `a`.
    pub tails_stay_inside: bool,
}

impl TailLemmaCheck {
    pub fn holds(&self) -> bool {
        self.sequentially_open == self.tails_stay_inside
    }
}

/// `a` is sequentially open iff every sequence with a limit in `a` has all
/// but finitely many terms (for these presentations: all cycle values) in
/// `a`.
pub fn check_lemma_seq(space: &FiniteSpace, a: &PointSet) -> Result<TailLemmaCheck> {
    let sequentially_open = is_sequentially_open(space, a)?.sequentially_open;
    let n = space.carrier_size();
    let mut tails_stay_inside = true;
    for s in tail_classes(&PointSet::full(n)) {
        let lim = seq_limits(&s, space)?;
        if !lim.is_disjoint(a) && !cycle_set(&s, n)?.is_subset(a) {
            tails_stay_inside = false;
            break;
        }
    }
    Ok(TailLemmaCheck {
        sequentially_open,
        tails_stay_inside,
    })
}

/// The topology whose opens are the sequentially open sets of `space`.
/// For a finite space this returns `space` itself.
pub fn seq_coreflection(space: &FiniteSpace) -> Result<FiniteSpace> {
    let n = space.carrier_size();
    let mut opens = Vec::new();
    for a in PointSet::all_subsets(n) {
        if is_sequentially_open(space, &a)?.sequentially_open {
            opens.push(a);
        }
    }
    // FiniteSpace::new re-checks closure under unions and intersections.
    FiniteSpace::new(n, opens)
}

/// A candidate neighbourhood basis at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountableBasisCandidate {
    pub point: usize,
    pub sets: Vec<PointSet>,
}

impl CountableBasisCandidate {
    /// Every listed set is a neighbourhood of the point, and every
    /// neighbourhood contains some listed set.
    pub fn is_basis(&self, space: &FiniteSpace) -> Result<bool> {
        for u in &self.sets {
            if !u.contains(self.point) || !space.is_open(u)? {
                return Ok(false);
            }
        }
        Ok(space
            .neighborhoods(self.point)
            .all(|v| self.sets.iter().any(|u| u.is_subset(v))))
    }
}

/// The one-element basis `{minimal_open(x)}`.
pub fn first_countable_witness(space: &FiniteSpace, x: usize) -> Result<CountableBasisCandidate> {
    let candidate = CountableBasisCandidate {
        point: x,
        sets: vec![space.minimal_open(x)?],
    };
    debug_assert!(candidate.is_basis(space)?);
    Ok(candidate)
}

/// First sequence whose convergence `f` fails to preserve, searched over
/// every tail class of the domain.
pub fn sequence_preservation_failure(
    f: &PointMap,
    from: &FiniteSpace,
    to: &FiniteSpace,
) -> Result<Option<SequenceWitness>> {
    for s in tail_classes(&from.full()) {
        let image = s.map(|&x| f.apply(x));
        let lim_from = seq_limits(&s, from)?;
        let lim_to = seq_limits(&image, to)?;
        let failed = lim_from.iter().find(|&y| !lim_to.contains(f.apply(y)));
        if let Some(y) = failed {
            return Ok(Some(SequenceWitness {
                sequence: s,
                limit: y,
            }));
        }
    }
    Ok(None)
}
