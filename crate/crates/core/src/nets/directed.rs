use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::finite_top::{FiniteSpace, PointSet};

/// A binary relation on `{0, .., size - 1}`, not yet known to be directed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    leq: Vec<Vec<bool>>,
}

impl Relation {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let k = leq.len();
        if let Some(row) = leq.iter().position(|r| r.len() != k) {
            return Err(Error::NotDirected(format!(
                "row {row} of the relation matrix does not have {k} entries"
            )));
        }
        Ok(Relation { leq })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Relation {
            leq: (0..size)
                .map(|a| (0..size).map(|b| f(a, b)).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    #[inline]
    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.leq
    }
}

/// Why a relation fails to be a directed preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectedViolation {
    Empty,
    NotReflexive(usize),
    NotTransitive(usize, usize, usize),
    NoUpperBound(usize, usize),
}

impl std::fmt::Display for DirectedViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DirectedViolation::Empty => f.write_str("index set is empty"),
            DirectedViolation::NotReflexive(a) => write!(f, "{a} ≤ {a} fails"),
            DirectedViolation::NotTransitive(a, b, c) => {
                write!(f, "{a} ≤ {b} and {b} ≤ {c} but not {a} ≤ {c}")
            }
            DirectedViolation::NoUpperBound(a, b) => write!(f, "{a} and {b} have no upper bound"),
        }
    }
}

/// Reflexive, transitive, and every pair has an upper bound. Returns the
/// first violation found, scanning in index order.
pub fn check_directed(r: &Relation) -> std::result::Result<(), DirectedViolation> {
    let k = r.size();
    if k == 0 {
        return Err(DirectedViolation::Empty);
    }
    for a in 0..k {
        if !r.holds(a, a) {
            return Err(DirectedViolation::NotReflexive(a));
        }
    }
    for a in 0..k {
        for b in 0..k {
            if !r.holds(a, b) {
                continue;
            }
            for c in 0..k {
                if r.holds(b, c) && !r.holds(a, c) {
                    return Err(DirectedViolation::NotTransitive(a, b, c));
                }
            }
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            if !(0..k).any(|c| r.holds(a, c) && r.holds(b, c)) {
                return Err(DirectedViolation::NoUpperBound(a, b));
            }
        }
    }
    Ok(())
}

/// A nonempty finite directed preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedSet {
    rel: Relation,
}

impl DirectedSet {
    pub fn new(rel: Relation) -> Result<Self> {
        check_directed(&rel).map_err(|v| Error::NotDirected(v.to_string()))?;
        Ok(DirectedSet { rel })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::new(Relation::from_fn(size, f))
    }

    /// `0 ≤ 1 ≤ .. ≤ k - 1`.
    pub fn chain(k: usize) -> Result<Self> {
        Self::from_fn(k, |a, b| a <= b)
    }

    pub fn size(&self) -> usize {
        self.rel.size()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rel.holds(a, b)
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    /// Elements `e` with `e ≥ d`.
    pub fn above(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&e| self.leq(d, e))
    }

    /// Smallest-index common upper bound.
    pub fn upper_bound(&self, a: usize, b: usize) -> usize {
        (0..self.size())
            .find(|&c| self.leq(a, c) && self.leq(b, c))
            .expect("directed sets have upper bounds")
    }

    /// Elements above every element. Nonempty for every finite directed
    /// set: an upper bound of the whole set, built pairwise.
    pub fn top_class(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&t| (0..self.size()).all(|d| self.leq(d, t)))
            .collect()
    }
}

/// Componentwise order; `(i, j)` is encoded as `i * |d2| + j`.
pub fn product_directed(d1: &DirectedSet, d2: &DirectedSet) -> DirectedSet {
    let k2 = d2.size();
    DirectedSet::from_fn(d1.size() * k2, |a, b| {
        d1.leq(a / k2, b / k2) && d2.leq(a % k2, b % k2)
    })
    .expect("products of directed sets are directed")
}

/// The neighbourhoods of `x` under reverse inclusion, with each element's
/// open set as its label.
pub fn neighborhood_directed(
    space: &FiniteSpace,
    x: usize,
) -> Result<(DirectedSet, Vec<PointSet>)> {
    space.minimal_open(x)?;
    let labels: Vec<PointSet> = space.neighborhoods(x).copied().collect();
    let d = reverse_inclusion(&labels)?;
    Ok((d, labels))
}

/// A family of sets ordered by reverse inclusion (`A ≤ B` iff `B ⊆ A`).
pub fn reverse_inclusion(sets: &[PointSet]) -> Result<DirectedSet> {
    DirectedSet::from_fn(sets.len(), |a, b| sets[b].is_subset(&sets[a]))
}

/// Directed preorders on `1..=max_size` elements, one per isomorphism
/// class, ordered by size and then by canonical relation mask.
pub fn directed_catalog(max_size: usize) -> Vec<DirectedSet> {
    assert!(max_size <= 4, "catalog limited to 4 elements");
    let mut out = Vec::new();
    for k in 1..=max_size {
        let mut classes = BTreeSet::new();
        let off_diag: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        for choice in 0u32..1 << off_diag.len() {
            let mut mask = 0u32;
            for a in 0..k {
                mask |= 1 << (a * k + a);
            }
            for (i, &(a, b)) in off_diag.iter().enumerate() {
                if choice & (1 << i) != 0 {
                    mask |= 1 << (a * k + b);
                }
            }
            let rel = Relation::from_fn(k, |a, b| mask & (1 << (a * k + b)) != 0);
            if check_directed(&rel).is_ok() {
                classes.insert(canonical_mask(k, mask));
            }
        }
        for mask in classes {
            out.push(DirectedSet {
                rel: Relation::from_fn(k, |a, b| mask & (1 << (a * k + b)) != 0),
            });
        }
    }
    out
}

/// Catalog up to three elements, computed once.
pub(crate) fn small_directed_catalog() -> &'static [DirectedSet] {
    static CATALOG: OnceLock<Vec<DirectedSet>> = OnceLock::new();
    CATALOG.get_or_init(|| directed_catalog(3))
}

fn canonical_mask(k: usize, mask: u32) -> u32 {
    let mut best = u32::MAX;
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut m = 0u32;
        for a in 0..k {
            for b in 0..k {
                if mask & (1 << (a * k + b)) != 0 {
                    m |= 1 << (p[a] * k + p[b]);
                }
            }
        }
        best = best.min(m);
    });
    best
}

fn permutations(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permutations(p, i + 1, f);
        p.swap(i, j);
    }
}
