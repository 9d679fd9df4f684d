use std::fmt;

use super::directed::DirectedSet;
use crate::error::{Error, Result};
use crate::finite_top::{FiniteSpace, PointMap, PointSet};
use crate::sequences::{cycle_set, EpSequence};

/// The index of a net: a finite directed set or `ω` with its usual order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Finite(DirectedSet),
    Omega,
}

/// A net in a finite space: a point for every element of its index set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Net {
    Finite {
        index: DirectedSet,
        values: Vec<usize>,
    },
    /// An `ω`-indexed net, i.e. a sequence.
    Sequence(EpSequence),
}

impl Net {
    pub fn finite(index: DirectedSet, values: Vec<usize>) -> Result<Self> {
        if values.len() != index.size() {
            return Err(Error::InvalidNet(format!(
                "{} values for an index set of size {}",
                values.len(),
                index.size()
            )));
        }
        Ok(Net::Finite { index, values })
    }

    pub fn constant_on(index: DirectedSet, x: usize) -> Self {
        let values = vec![x; index.size()];
        Net::Finite { index, values }
    }

    pub fn index(&self) -> IndexSet {
        match self {
            Net::Finite { index, .. } => IndexSet::Finite(index.clone()),
            Net::Sequence(_) => IndexSet::Omega,
        }
    }

    /// Every point the net takes.
    pub fn values(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        match self {
            Net::Finite { values, .. } => Box::new(values.iter().copied()),
            Net::Sequence(s) => Box::new(s.values().copied()),
        }
    }

    pub fn check_carrier(&self, n: usize) -> Result<()> {
        match self.values().find(|&v| v >= n) {
            Some(point) => Err(Error::PointOutOfRange { point, size: n }),
            None => Ok(()),
        }
    }

    /// The set of points the net takes, over a carrier of size `n`.
    pub fn range(&self, n: usize) -> Result<PointSet> {
        self.check_carrier(n)?;
        PointSet::from_points(n, self.values())
    }

    /// `f ∘ net`.
    pub fn map(&self, f: &PointMap) -> Net {
        match self {
            Net::Finite { index, values } => Net::Finite {
                index: index.clone(),
                values: values.iter().map(|&x| f.apply(x)).collect(),
            },
            Net::Sequence(s) => Net::Sequence(s.map(|&x| f.apply(x))),
        }
    }

    /// There is `d` with `x_e ∈ a` for all `e ≥ d`.
    pub fn eventually_in(&self, a: &PointSet) -> Result<bool> {
        self.check_carrier(a.carrier_size())?;
        Ok(match self {
            Net::Finite { index, values } => {
                (0..index.size()).any(|d| index.above(d).all(|e| a.contains(values[e])))
            }
            Net::Sequence(s) => cycle_set(s, a.carrier_size())?.is_subset(a),
        })
    }

    /// For every `d` there is `e ≥ d` with `x_e ∈ a`.
    pub fn frequently_in(&self, a: &PointSet) -> Result<bool> {
        self.check_carrier(a.carrier_size())?;
        Ok(match self {
            Net::Finite { index, values } => {
                (0..index.size()).all(|d| index.above(d).any(|e| a.contains(values[e])))
            }
            Net::Sequence(s) => !cycle_set(s, a.carrier_size())?.is_disjoint(a),
        })
    }
}

impl fmt::Debug for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Net::Finite { index, values } => {
                write!(f, "Net(")?;
                for row in index.relation().rows() {
                    for &b in row {
                        f.write_str(if b { "1" } else { "0" })?;
                    }
                    f.write_str(" ")?;
                }
                write!(f, "values {values:?})")
            }
            Net::Sequence(s) => write!(f, "Net{s}"),
        }
    }
}

/// Points `y` such that the net is eventually in every neighbourhood of `y`.
pub fn net_limits(net: &Net, space: &FiniteSpace) -> Result<PointSet> {
    let n = space.carrier_size();
    net.check_carrier(n)?;
    let mut out = PointSet::empty(n);
    for y in 0..n {
        let mut converges = true;
        for u in space.neighborhoods(y) {
            if !net.eventually_in(u)? {
                converges = false;
                break;
            }
        }
        if converges {
            out.insert(y)?;
        }
    }
    Ok(out)
}

/// Points `y` such that the net is frequently in every neighbourhood of `y`.
pub fn cluster_points(net: &Net, space: &FiniteSpace) -> Result<PointSet> {
    let n = space.carrier_size();
    net.check_carrier(n)?;
    let mut out = PointSet::empty(n);
    for y in 0..n {
        let mut clusters = true;
        for u in space.neighborhoods(y) {
            if !net.frequently_in(u)? {
                clusters = false;
                break;
            }
        }
        if clusters {
            out.insert(y)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    fn seq(prefix: &[usize], cycle: &[usize]) -> Net {
        Net::Sequence(EpSequence::new(prefix.to_vec(), cycle.to_vec()).unwrap())
    }

    #[test]
    fn limits_examples() {
        let s = FiniteSpace::sierpinski();
        let c = Net::constant_on(DirectedSet::chain(2).unwrap(), 1);
        assert!(net_limits(&c, &s).unwrap().contains(1));

        let ind = FiniteSpace::indiscrete(2);
        let any = Net::finite(DirectedSet::chain(3).unwrap(), vec![0, 1, 0]).unwrap();
        assert_eq!(net_limits(&any, &ind).unwrap(), ind.full());

        // [a | b]: a's neighbourhood {a} misses the tail; b's only neighbourhood is X
        assert_eq!(net_limits(&seq(&[0], &[1]), &s).unwrap(), set(2, &[1]));
    }

    #[test]
    fn cluster_examples() {
        let d = FiniteSpace::discrete(2);
        let osc = seq(&[], &[0, 1]);
        assert_eq!(cluster_points(&osc, &d).unwrap(), d.full());
        assert!(net_limits(&osc, &d).unwrap().is_empty());

        let c = Net::constant_on(DirectedSet::chain(3).unwrap(), 0);
        let s = FiniteSpace::sierpinski();
        assert_eq!(cluster_points(&c, &s).unwrap(), net_limits(&c, &s).unwrap());

        let ind = FiniteSpace::indiscrete(3);
        assert_eq!(cluster_points(&seq(&[2], &[0]), &ind).unwrap(), ind.full());
    }

    #[test]
    fn value_out_of_range() {
        let net = seq(&[], &[3]);
        assert!(net_limits(&net, &FiniteSpace::discrete(2)).is_err());
        assert!(Net::finite(DirectedSet::chain(2).unwrap(), vec![0]).is_err());
    }

    #[test]
    fn top_class_determines_convergence() {
        // Convergence of a finite-indexed net equals: every neighbourhood of
        // y holds all values on the top class. Brute force over the size ≤ 4
        // catalog and every value assignment into the 3-point topologies.
        use crate::finite_top::enumerate_topologies;
        use crate::nets::directed_catalog;
        let tops = enumerate_topologies(3).unwrap();
        for d in directed_catalog(4) {
            let top = d.top_class();
            let k = d.size();
            for code in 0..3usize.pow(k as u32) {
                let values: Vec<usize> = (0..k).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                let net = Net::finite(d.clone(), values.clone()).unwrap();
                for t in &tops {
                    let lim = net_limits(&net, t).unwrap();
                    for y in 0..3 {
                        let by_top = t
                            .neighborhoods(y)
                            .all(|u| top.iter().all(|&e| u.contains(values[e])));
                        assert_eq!(lim.contains(y), by_top);
                    }
                }
            }
        }
    }
}
