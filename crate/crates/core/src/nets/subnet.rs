use super::directed::{neighborhood_directed, DirectedSet};
use super::net::{cluster_points, IndexSet, Net};
use crate::error::{Error, Result};
use crate::finite_top::{FiniteSpace, PointSet};
use crate::sequences::EpSequence;

/// An `ω → ω` reindexing: `prefix[e]` for `e < prefix.len()`, then
/// `⌊(numerator·e + offset) / denominator⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineTail {
    pub prefix: Vec<usize>,
    pub numerator: usize,
    pub offset: usize,
    pub denominator: usize,
}

impl AffineTail {
    pub fn new(
        prefix: Vec<usize>,
        numerator: usize,
        offset: usize,
        denominator: usize,
    ) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidNet(
                "affine denominator must be positive".into(),
            ));
        }
        Ok(AffineTail {
            prefix,
            numerator,
            offset,
            denominator,
        })
    }

    /// `e ↦ c·e + d`.
    pub fn linear(c: usize, d: usize) -> Self {
        AffineTail {
            prefix: vec![],
            numerator: c,
            offset: d,
            denominator: 1,
        }
    }

    #[inline]
    pub fn apply(&self, e: usize) -> usize {
        if e < self.prefix.len() {
            self.prefix[e]
        } else {
            (self.numerator * e + self.offset) / self.denominator
        }
    }

    pub fn is_order_preserving(&self) -> bool {
        let p = self.prefix.len();
        self.prefix.windows(2).all(|w| w[0] <= w[1])
            && (p == 0 || self.prefix[p - 1] <= self.apply(p))
    }

    /// The image is unbounded in `ω`.
    pub fn is_cofinal(&self) -> bool {
        self.numerator > 0
    }

    /// Meaningful for order-preserving maps.
    pub fn is_injective(&self) -> bool {
        let p = self.prefix.len();
        self.prefix.windows(2).all(|w| w[0] < w[1])
            && (p == 0 || self.prefix[p - 1] < self.apply(p))
            && self.numerator >= self.denominator
    }

    /// `outer ∘ self` as an eventually periodic presentation.
    pub fn compose(&self, outer: &EpSequence) -> EpSequence {
        let p = self.prefix.len();
        if self.numerator == 0 {
            let prefix = (0..p).map(|e| *outer.get(self.apply(e))).collect();
            return EpSequence::new(prefix, vec![*outer.get(self.apply(p))]).expect("nonempty");
        }
        // Once g(e) has passed the outer prefix, g(e + den·L) = g(e) + num·L
        // lands on the same cycle position.
        let mut start = p;
        while self.apply(start) < outer.prefix().len() {
            start += 1;
        }
        let period = self.denominator * outer.cycle().len();
        let prefix = (0..start).map(|e| *outer.get(self.apply(e))).collect();
        let cycle = (start..start + period)
            .map(|e| *outer.get(self.apply(e)))
            .collect();
        EpSequence::new(prefix, cycle).expect("nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Reindexing {
    /// `map[e]` for each element of a finite source.
    Finite(Vec<usize>),
    Affine(AffineTail),
}

/// A reindexing `f: E → D` from the index of a subnet to the index of the
/// net it is taken from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubnetMap {
    source: IndexSet,
    target: IndexSet,
    map: Reindexing,
}

impl SubnetMap {
    pub fn new(source: IndexSet, target: IndexSet, map: Reindexing) -> Result<Self> {
        match (&source, &target, &map) {
            (IndexSet::Finite(e), IndexSet::Finite(d), Reindexing::Finite(m)) => {
                if m.len() != e.size() {
                    return Err(Error::IndexMismatch);
                }
                if let Some(&bad) = m.iter().find(|&&v| v >= d.size()) {
                    return Err(Error::PointOutOfRange {
                        point: bad,
                        size: d.size(),
                    });
                }
            }
            (IndexSet::Omega, IndexSet::Omega, Reindexing::Affine(_)) => {}
            _ => return Err(Error::IndexMismatch),
        }
        Ok(SubnetMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(index: &IndexSet) -> Self {
        let map = match index {
            IndexSet::Finite(d) => Reindexing::Finite((0..d.size()).collect()),
            IndexSet::Omega => Reindexing::Affine(AffineTail::linear(1, 0)),
        };
        SubnetMap {
            source: index.clone(),
            target: index.clone(),
            map,
        }
    }

    pub fn source(&self) -> &IndexSet {
        &self.source
    }

    pub fn target(&self) -> &IndexSet {
        &self.target
    }

    pub fn reindexing(&self) -> &Reindexing {
        &self.map
    }

    pub fn apply(&self, e: usize) -> usize {
        match &self.map {
            Reindexing::Finite(m) => m[e],
            Reindexing::Affine(a) => a.apply(e),
        }
    }

    /// `e1 ≤ e2 ⇒ f(e1) ≤ f(e2)`.
    pub fn is_order_preserving(&self) -> bool {
        match (&self.source, &self.target, &self.map) {
            (IndexSet::Finite(e), IndexSet::Finite(d), Reindexing::Finite(m)) => {
                (0..e.size()).all(|a| e.above(a).all(|b| d.leq(m[a], m[b])))
            }
            (_, _, Reindexing::Affine(a)) => a.is_order_preserving(),
            _ => false,
        }
    }

    /// Every element of the target lies below some image point.
    pub fn is_cofinal(&self) -> bool {
        match (&self.target, &self.map) {
            (IndexSet::Finite(d), Reindexing::Finite(m)) => {
                (0..d.size()).all(|t| m.iter().any(|&v| d.leq(t, v)))
            }
            (_, Reindexing::Affine(a)) => a.is_cofinal(),
            _ => false,
        }
    }

    pub fn is_injective(&self) -> bool {
        match &self.map {
            Reindexing::Finite(m) => {
                let mut seen = m.clone();
                seen.sort();
                seen.windows(2).all(|w| w[0] != w[1])
            }
            Reindexing::Affine(a) => a.is_injective(),
        }
    }

    /// The net `e ↦ x_{f(e)}`.
    pub fn pull_back(&self, outer: &Net) -> Result<Net> {
        if outer.index() != self.target {
            return Err(Error::IndexMismatch);
        }
        match (outer, &self.source, &self.map) {
            (Net::Finite { values, .. }, IndexSet::Finite(e), Reindexing::Finite(m)) => {
                Net::finite(e.clone(), m.iter().map(|&d| values[d]).collect())
            }
            (Net::Sequence(s), IndexSet::Omega, Reindexing::Affine(a)) => {
                Ok(Net::Sequence(a.compose(s)))
            }
            _ => Err(Error::IndexMismatch),
        }
    }
}

/// `candidate` is the subnet of `outer` along `sub`: values agree with
/// `outer ∘ f`, and `f` is order preserving with cofinal image.
pub fn is_subnet(sub: &SubnetMap, outer: &Net, candidate: &Net) -> Result<bool> {
    if candidate.index() != sub.source || outer.index() != sub.target {
        return Err(Error::IndexMismatch);
    }
    let pulled = sub.pull_back(outer)?;
    let same_values = match (&pulled, candidate) {
        (Net::Finite { values: a, .. }, Net::Finite { values: b, .. }) => a == b,
        (Net::Sequence(a), Net::Sequence(b)) => a.same_terms(b),
        _ => false,
    };
    Ok(same_values && sub.is_order_preserving() && sub.is_cofinal())
}

#[derive(Clone, Debug)]
pub struct ClusterSubnet {
    pub map: SubnetMap,
    pub subnet: Net,
    /// For finite nets, the pair `(d, U)` behind each element of the new
    /// index set.
    pub labels: Vec<(usize, PointSet)>,
}

/// A subnet converging to the cluster point `y`.
///
/// For a net over a finite directed set `D` the index set is
/// `E = {(d, U) ∈ D × N(y) : x_d ∈ U}` ordered componentwise (reverse
/// inclusion on `U`), reindexed by `(d, U) ↦ d`. For a sequence it is the
/// arithmetic subsequence through the first cycle position whose value lies
/// in `minimal_open(y)`.
pub fn subnet_from_cluster(net: &Net, space: &FiniteSpace, y: usize) -> Result<ClusterSubnet> {
    space.minimal_open(y)?;
    if !cluster_points(net, space)?.contains(y) {
        return Err(Error::NotClusterPoint(y));
    }
    match net {
        Net::Finite { index, values } => {
            let (_, nbhds) = neighborhood_directed(space, y)?;
            let labels: Vec<(usize, PointSet)> = (0..index.size())
                .flat_map(|d| nbhds.iter().map(move |u| (d, *u)))
                .filter(|(d, u)| u.contains(values[*d]))
                .collect();
            let e = DirectedSet::from_fn(labels.len(), |a, b| {
                let (d1, u1) = labels[a];
                let (d2, u2) = labels[b];
                index.leq(d1, d2) && u2.is_subset(&u1)
            })?;
            let map = SubnetMap::new(
                IndexSet::Finite(e),
                IndexSet::Finite(index.clone()),
                Reindexing::Finite(labels.iter().map(|(d, _)| *d).collect()),
            )?;
            let subnet = map.pull_back(net)?;
            Ok(ClusterSubnet {
                map,
                subnet,
                labels,
            })
        }
        Net::Sequence(s) => {
            let near = space.minimal_open(y)?;
            let j = s
                .cycle()
                .iter()
                .position(|&v| near.contains(v))
                .ok_or(Error::NotClusterPoint(y))?;
            let tail = AffineTail::linear(s.cycle().len(), s.prefix().len() + j);
            let map = SubnetMap::new(IndexSet::Omega, IndexSet::Omega, Reindexing::Affine(tail))?;
            let subnet = map.pull_back(net)?;
            Ok(ClusterSubnet {
                map,
                subnet,
                labels: vec![],
            })
        }
    }
}
