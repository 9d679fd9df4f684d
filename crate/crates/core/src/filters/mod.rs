//! Filters on finite carriers and their dictionary with nets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::finite_top::{product, projections, FiniteSpace, PointMap, PointSet};
use crate::nets::{reverse_inclusion, Net};

/// Largest carrier on which filter families are materialized.
pub const MAX_FILTER_CARRIER: usize = 12;

/// A nonempty family of subsets, closed under intersection and supersets,
/// not containing `∅`. Members are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    n: usize,
    sets: Vec<PointSet>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_FILTER_CARRIER {
        return Err(Error::TooLarge {
            n,
            max: MAX_FILTER_CARRIER,
        });
    }
    Ok(())
}

impl Filter {
    pub fn new(n: usize, sets: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut family = BTreeSet::new();
        for s in sets {
            s.ensure_carrier(n)?;
            family.insert(s);
        }
        if family.is_empty() {
            return Err(Error::NotAFilter("family is empty".into()));
        }
        if family.contains(&PointSet::empty(n)) {
            return Err(Error::NotAFilter("contains the empty set".into()));
        }
        for a in &family {
            for b in &family {
                if !family.contains(&a.intersection(b)) {
                    return Err(Error::NotAFilter(format!("{a} ∩ {b} missing")));
                }
            }
            for sup in PointSet::all_subsets(n).filter(|s| a.is_subset(s)) {
                if !family.contains(&sup) {
                    return Err(Error::NotAFilter(format!("superset {sup} of {a} missing")));
                }
            }
        }
        Ok(Filter {
            n,
            sets: family.into_iter().collect(),
        })
    }

    /// The filter generated by a base: supersets of finite intersections.
    pub fn from_base(n: usize, base: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut kernel = PointSet::full(n);
        let mut any = false;
        for b in base {
            b.ensure_carrier(n)?;
            kernel = kernel.intersection(&b);
            any = true;
        }
        if !any {
            return Err(Error::NotAFilter("base is empty".into()));
        }
        if kernel.is_empty() {
            return Err(Error::NotAFilter(
                "base has an empty finite intersection".into(),
            ));
        }
        Ok(Self::above(kernel))
    }

    /// `{A : k ⊆ A}` for nonempty `k`.
    fn above(kernel: PointSet) -> Self {
        let n = kernel.carrier_size();
        Filter {
            n,
            sets: PointSet::all_subsets(n)
                .filter(|s| kernel.is_subset(s))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        }
    }

    pub fn principal(n: usize, x: usize) -> Result<Ultrafilter> {
        check_size(n)?;
        Ok(Ultrafilter(Self::above(PointSet::singleton(n, x)?)))
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn contains(&self, a: &PointSet) -> bool {
        self.sets.binary_search(a).is_ok()
    }

    /// Intersection of all members; nonempty on a finite carrier.
    pub fn kernel(&self) -> PointSet {
        self.sets
            .iter()
            .fold(PointSet::full(self.n), |k, s| k.intersection(s))
    }

    pub fn is_subfamily_of(&self, other: &Filter) -> bool {
        self.sets.iter().all(|s| other.contains(s))
    }

    /// For every subset exactly one of it and its complement is a member.
    pub fn is_ultrafilter(&self) -> bool {
        PointSet::all_subsets(self.n).all(|a| self.contains(&a) != self.contains(&a.complement()))
    }
}

/// A filter deciding every subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ultrafilter(Filter);

impl Ultrafilter {
    pub fn new(f: Filter) -> Result<Self> {
        if !f.is_ultrafilter() {
            return Err(Error::NotAnUltrafilter(format!(
                "kernel {} is not a point",
                f.kernel()
            )));
        }
        Ok(Ultrafilter(f))
    }

    pub fn filter(&self) -> &Filter {
        &self.0
    }

    /// The point the ultrafilter is principal at.
    pub fn point(&self) -> usize {
        self.0
            .kernel()
            .first()
            .expect("ultrafilter kernels are singletons")
    }
}

/// `{A : the net is eventually in A}`.
pub fn eventuality_filter(net: &Net, n: usize) -> Result<Filter> {
    check_size(n)?;
    net.check_carrier(n)?;
    let mut sets = Vec::new();
    for a in PointSet::all_subsets(n) {
        if net.eventually_in(&a)? {
            sets.push(a);
        }
    }
    Filter::new(n, sets)
}

/// Points every neighbourhood of which is a member.
pub fn filter_limits(f: &Filter, space: &FiniteSpace) -> Result<PointSet> {
    let n = space.carrier_size();
    if f.carrier_size() != n {
        return Err(Error::CarrierMismatch {
            expected: n,
            found: f.carrier_size(),
        });
    }
    let mut out = PointSet::empty(n);
    for y in 0..n {
        if space.neighborhoods(y).all(|u| f.contains(u)) {
            out.insert(y)?;
        }
    }
    Ok(out)
}

/// The net indexed by the members of `f` under reverse inclusion, taking
/// `choice[i]` at the `i`-th member (in [`Filter::sets`] order).
pub fn filter_to_net(f: &Filter, choice: &[usize]) -> Result<Net> {
    if choice.len() != f.sets().len() {
        return Err(Error::InvalidChoice(format!(
            "{} choices for {} members",
            choice.len(),
            f.sets().len()
        )));
    }
    for (a, &x) in f.sets().iter().zip(choice) {
        if !a.contains(x) {
            return Err(Error::InvalidChoice(format!("{x} ∉ {a}")));
        }
    }
    Net::finite(reverse_inclusion(f.sets())?, choice.to_vec())
}

/// `filter_to_net` with the smallest point of each member.
pub fn filter_to_net_min(f: &Filter) -> Result<Net> {
    let choice: Vec<usize> = f
        .sets()
        .iter()
        .map(|a| a.first().expect("members are nonempty"))
        .collect();
    filter_to_net(f, &choice)
}

/// The net over pairs `(A, x)` with `x ∈ A ∈ f`, ordered by reverse
/// inclusion on `A`, taking the value `x`. Unlike a single choice net its
/// limits are exactly the filter's limits.
pub fn filter_pair_net(f: &Filter) -> Result<Net> {
    let pairs: Vec<(PointSet, usize)> = f
        .sets()
        .iter()
        .flat_map(|a| a.iter().map(move |x| (*a, x)))
        .collect();
    let index =
        crate::nets::DirectedSet::from_fn(pairs.len(), |i, j| pairs[j].0.is_subset(&pairs[i].0))?;
    Net::finite(index, pairs.iter().map(|p| p.1).collect())
}

/// The principal ultrafilter at the smallest point of the kernel.
pub fn ultrafilter_refine(f: &Filter) -> Ultrafilter {
    let x = f
        .kernel()
        .first()
        .expect("finite filters have nonempty kernels");
    Filter::principal(f.carrier_size(), x).expect("kernel point is in range")
}

/// `{B : g⁻¹(B) ∈ f}`.
pub fn pushforward(f: &Filter, g: &PointMap) -> Result<Filter> {
    if g.domain_size() != f.carrier_size() {
        return Err(Error::CarrierMismatch {
            expected: f.carrier_size(),
            found: g.domain_size(),
        });
    }
    let m = g.codomain_size();
    check_size(m)?;
    let sets: Vec<PointSet> = PointSet::all_subsets(m)
        .filter(|b| f.contains(&g.preimage(b)))
        .collect();
    Filter::new(m, sets)
}

/// Limits of an ultrafilter on `s1 × s2` assembled from the limits of its
/// two projections.
pub fn tychonoff_limit(u: &Ultrafilter, s1: &FiniteSpace, s2: &FiniteSpace) -> Result<PointSet> {
    let (n1, n2) = (s1.carrier_size(), s2.carrier_size());
    let (p1, p2) = projections(n1, n2);
    let l1 = filter_limits(&pushforward(u.filter(), &p1)?, s1)?;
    let l2 = filter_limits(&pushforward(u.filter(), &p2)?, s2)?;
    let mut out = PointSet::empty(n1 * n2);
    for i in l1.iter() {
        for j in l2.iter() {
            out.insert(i * n2 + j)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TychonoffCheck {
    pub ultrafilter: usize,
    pub by_projections: PointSet,
    pub direct: PointSet,
}

/// Compares [`tychonoff_limit`] with `filter_limits` on the product for
/// every ultrafilter of `s1 × s2`. Returns the mismatches.
pub fn check_tychonoff(s1: &FiniteSpace, s2: &FiniteSpace) -> Result<Vec<TychonoffCheck>> {
    let prod = product(s1, s2)?;
    let n = prod.carrier_size();
    let mut bad = Vec::new();
    for x in 0..n {
        let u = Filter::principal(n, x)?;
        let by_projections = tychonoff_limit(&u, s1, s2)?;
        let direct = filter_limits(u.filter(), &prod)?;
        if by_projections != direct || direct.is_empty() {
            bad.push(TychonoffCheck {
                ultrafilter: x,
                by_projections,
                direct,
            });
        }
    }
    Ok(bad)
}

/// Every filter on `{0..n-1}`, found by testing every family of subsets.
pub fn enumerate_filters(n: usize) -> Result<Vec<Filter>> {
    if n > 4 {
        return Err(Error::TooLarge { n, max: 4 });
    }
    let subsets: Vec<PointSet> = PointSet::all_subsets(n).collect();
    let mut out = Vec::new();
    for fam in 1u64..1 << subsets.len() {
        let sets = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| fam & (1 << i) != 0)
            .map(|(_, s)| *s);
        if let Ok(f) = Filter::new(n, sets) {
            out.push(f);
        }
    }
    out.sort();
    Ok(out)
}

/// Every ultrafilter on `{0..n-1}`, found by filtering [`enumerate_filters`].
pub fn enumerate_ultrafilters(n: usize) -> Result<Vec<Ultrafilter>> {
    Ok(enumerate_filters(n)?
        .into_iter()
        .filter(Filter::is_ultrafilter)
        .map(Ultrafilter)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrafilterCompactness {
    pub compact_by_covers: bool,
    pub every_ultrafilter_converges: bool,
    /// First ultrafilter without a limit.
    pub divergent: Option<Ultrafilter>,
}

impl UltrafilterCompactness {
    pub fn agrees(&self) -> bool {
        self.compact_by_covers == self.every_ultrafilter_converges
    }
}

pub fn check_compact_ultrafilters(space: &FiniteSpace) -> Result<UltrafilterCompactness> {
    let compact_by_covers = crate::finite_top::is_compact_by_covers(space, None)?.compact;
    let mut divergent = None;
    for u in enumerate_ultrafilters(space.carrier_size())? {
        if filter_limits(u.filter(), space)?.is_empty() {
            divergent = Some(u);
            break;
        }
    }
    Ok(UltrafilterCompactness {
        compact_by_covers,
        every_ultrafilter_converges: divergent.is_none(),
        divergent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nets::{net_limits, DirectedSet};
    use crate::sequences::EpSequence;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Filter::new(2, [set(2, &[0])]).is_err());
        assert!(Filter::new(2, [set(2, &[0]), set(2, &[0, 1]), PointSet::empty(2)]).is_err());
        assert!(Filter::new(2, [set(2, &[0]), set(2, &[1]), set(2, &[0, 1])]).is_err());
        assert!(Filter::new(2, []).is_err());
        assert!(Filter::from_base(2, [set(2, &[0]), set(2, &[1])]).is_err());
        let f = Filter::from_base(3, [set(3, &[0, 1]), set(3, &[1, 2])]).unwrap();
        assert_eq!(f, Filter::principal(3, 1).unwrap().filter().clone());
    }

    #[test]
    fn eventuality_examples() {
        let c = Net::constant_on(DirectedSet::chain(2).unwrap(), 1);
        assert_eq!(
            eventuality_filter(&c, 2).unwrap(),
            Filter::principal(2, 1).unwrap().0
        );

        let ab = Net::finite(DirectedSet::chain(2).unwrap(), vec![0, 1]).unwrap();
        let f = eventuality_filter(&ab, 2).unwrap();
        assert_eq!(f.sets(), &[set(2, &[1]), set(2, &[0, 1])]);

        let osc = Net::Sequence(EpSequence::new(vec![], vec![0, 1]).unwrap());
        let f = eventuality_filter(&osc, 3).unwrap();
        assert_eq!(f.sets(), &[set(3, &[0, 1]), set(3, &[0, 1, 2])]);
    }

    #[test]
    fn limit_examples() {
        let p = Filter::principal(2, 0).unwrap();
        assert_eq!(
            filter_limits(p.filter(), &FiniteSpace::discrete(2)).unwrap(),
            set(2, &[0])
        );
        assert_eq!(
            filter_limits(p.filter(), &FiniteSpace::sierpinski()).unwrap(),
            set(2, &[0, 1])
        );
        let top = Filter::new(2, [PointSet::full(2)]).unwrap();
        let ind = FiniteSpace::indiscrete(2);
        assert_eq!(filter_limits(&top, &ind).unwrap(), ind.full());
        assert!(filter_limits(&top, &FiniteSpace::discrete(3)).is_err());
    }

    #[test]
    fn filter_nets_over_every_choice() {
        // A point is a filter limit iff every choice net converges to it.
        // A single choice net can converge to more points: its top class is
        // the one chosen point of the kernel.
        for n in 1..=3 {
            let tops = crate::finite_top::enumerate_topologies(n).unwrap();
            for f in enumerate_filters(n).unwrap() {
                let members: Vec<Vec<usize>> =
                    f.sets().iter().map(|a| a.iter().collect()).collect();
                let mut common: Vec<PointSet> = tops.iter().map(|t| t.full()).collect();
                let mut idx = vec![0usize; members.len()];
                loop {
                    let choice: Vec<usize> = idx.iter().zip(&members).map(|(&i, m)| m[i]).collect();
                    let net = filter_to_net(&f, &choice).unwrap();
                    for (t, c) in tops.iter().zip(common.iter_mut()) {
                        let lim = net_limits(&net, t).unwrap();
                        let flim = filter_limits(&f, t).unwrap();
                        assert!(flim.is_subset(&lim));
                        if f.is_ultrafilter() {
                            assert_eq!(lim, flim);
                        }
                        *c = c.intersection(&lim);
                    }
                    let mut k = 0;
                    while k < idx.len() {
                        idx[k] += 1;
                        if idx[k] < members[k].len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == idx.len() {
                        break;
                    }
                }
                let pair = filter_pair_net(&f).unwrap();
                for (t, c) in tops.iter().zip(&common) {
                    let flim = filter_limits(&f, t).unwrap();
                    assert_eq!(c, &flim);
                    assert_eq!(net_limits(&pair, t).unwrap(), flim);
                }
            }
        }
    }

    #[test]
    fn single_choice_can_overshoot() {
        let osc = Net::Sequence(EpSequence::new(vec![], vec![0, 1]).unwrap());
        let d = FiniteSpace::discrete(2);
        let f = eventuality_filter(&osc, 2).unwrap();
        assert!(filter_limits(&f, &d).unwrap().is_empty());
        assert_eq!(
            net_limits(&filter_to_net_min(&f).unwrap(), &d).unwrap(),
            set(2, &[0])
        );
        assert!(net_limits(&filter_pair_net(&f).unwrap(), &d)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bad_choice() {
        let f = Filter::new(2, [set(2, &[1]), PointSet::full(2)]).unwrap();
        assert!(filter_to_net(&f, &[0, 0]).is_err());
        assert!(filter_to_net(&f, &[1]).is_err());
    }

    #[test]
    fn refinement() {
        let top = Filter::new(2, [PointSet::full(2)]).unwrap();
        assert_eq!(ultrafilter_refine(&top).point(), 0);
        let p = Filter::principal(3, 2).unwrap();
        assert_eq!(ultrafilter_refine(p.filter()), p);
        let f = Filter::from_base(3, [set(3, &[1, 2])]).unwrap();
        assert_eq!(ultrafilter_refine(&f).point(), 1);
    }

    #[test]
    fn filter_counts() {
        // filters on a finite set are the principal filters of nonempty sets
        for n in 0..=3 {
            assert_eq!(enumerate_filters(n).unwrap().len(), (1 << n) - 1);
            assert_eq!(enumerate_ultrafilters(n).unwrap().len(), n);
        }
    }

    #[test]
    fn tychonoff_sierpinski_square() {
        let s = FiniteSpace::sierpinski();
        assert!(check_tychonoff(&s, &s).unwrap().is_empty());
        let u = Filter::principal(4, 0).unwrap();
        // (a,a) lies in every neighbourhood of every point
        assert_eq!(tychonoff_limit(&u, &s, &s).unwrap(), PointSet::full(4));
        let d = FiniteSpace::discrete(2);
        let u = Filter::principal(4, 1).unwrap();
        assert_eq!(tychonoff_limit(&u, &d, &d).unwrap(), set(4, &[1]));
    }

    #[test]
    fn ultrafilter_compactness_small() {
        for n in 0..=3 {
            for t in crate::finite_top::enumerate_topologies(n).unwrap() {
                let r = check_compact_ultrafilters(&t).unwrap();
                assert!(r.agrees() && r.compact_by_covers);
            }
        }
    }
}
