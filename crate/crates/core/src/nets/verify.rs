//! Net characterizations of openness, continuity, Hausdorffness and
//! compactness, checked on finite spaces.
//!
//! Universal claims ("no net does X") are checked over the net catalog:
//! every net over every directed set of size ≤ 3 (up to isomorphism) and
//! every sequence with prefix ≤ 2 and cycle ≤ 2. Existential claims are
//! settled by explicit witness nets.

use super::directed::{neighborhood_directed, product_directed, small_directed_catalog};
use super::net::{cluster_points, net_limits, Net};
use super::subnet::{is_subnet, subnet_from_cluster};
use crate::error::Result;
use crate::finite_top::{FiniteSpace, PointMap, PointSet};
use crate::sequences::EpSequence;

const CATALOG_PREFIX: usize = 2;
const CATALOG_CYCLE: usize = 2;

/// All words of length `len` over `points`, in lexicographic order.
fn words(points: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                points.iter().map(move |&p| {
                    let mut w = w.clone();
                    w.push(p);
                    w
                })
            })
            .collect();
    }
    out
}

/// Sequences with prefix length ≤ 2 and cycle length 1 or 2, valued in
/// `points`.
pub fn sequence_catalog(points: &[usize]) -> Vec<EpSequence> {
    let mut out = Vec::new();
    for p in 0..=CATALOG_PREFIX {
        for c in 1..=CATALOG_CYCLE {
            for prefix in words(points, p) {
                for cycle in words(points, c) {
                    out.push(EpSequence::new(prefix.clone(), cycle).expect("nonempty cycle"));
                }
            }
        }
    }
    out
}

/// The catalog of nets valued in `within`.
pub fn net_catalog(within: &PointSet) -> Vec<Net> {
    let points: Vec<usize> = within.iter().collect();
    let mut out = Vec::new();
    if points.is_empty() {
        return out;
    }
    for d in small_directed_catalog() {
        for values in words(&points, d.size()) {
            out.push(Net::finite(d.clone(), values).expect("sizes agree"));
        }
    }
    out.extend(sequence_catalog(&points).into_iter().map(Net::Sequence));
    out
}

/// A net together with one of its limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetWitness {
    pub net: Net,
    pub limit: usize,
}

/// For a set `a` that is not open: the net over `N(y)` with
/// `x_U = min(U \ a)`, where `y` is the first point of `a` none of whose
/// neighbourhoods fits inside `a`.
pub fn openness_witness(space: &FiniteSpace, a: &PointSet) -> Result<Option<NetWitness>> {
    a.ensure_carrier(space.carrier_size())?;
    let outside = a.complement();
    let Some(y) = a
        .iter()
        .find(|&y| space.neighborhoods(y).all(|u| !u.is_disjoint(&outside)))
    else {
        return Ok(None);
    };
    let (index, labels) = neighborhood_directed(space, y)?;
    let values = labels
        .iter()
        .map(|u| {
            u.intersection(&outside)
                .first()
                .expect("meets the complement")
        })
        .collect();
    Ok(Some(NetWitness {
        net: Net::finite(index, values)?,
        limit: y,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpennessEntry {
    pub set: PointSet,
    pub open: bool,
    /// No net valued outside the set has a limit inside it.
    pub open_by_nets: bool,
    pub witness: Option<NetWitness>,
    pub nets_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetOpennessReport {
    pub entries: Vec<OpennessEntry>,
}

impl NetOpennessReport {
    pub fn agrees(&self) -> bool {
        self.entries.iter().all(|e| e.open == e.open_by_nets)
    }
}

/// Checks, for every subset, that it is open iff no net in its complement
/// converges into it.
pub fn verify_net_openness(space: &FiniteSpace) -> Result<NetOpennessReport> {
    let mut entries = Vec::new();
    for a in PointSet::all_subsets(space.carrier_size()) {
        let open = space.is_open(&a)?;
        let mut nets_checked = 0;
        let mut open_by_nets = true;
        let witness = openness_witness(space, &a)?;
        if let Some(w) = &witness {
            nets_checked += 1;
            let lim = net_limits(&w.net, space)?;
            let outside = w
                .net
                .range(space.carrier_size())?
                .is_subset(&a.complement());
            if outside && lim.contains(w.limit) && a.contains(w.limit) {
                open_by_nets = false;
            }
        }
        if open_by_nets {
            for net in net_catalog(&a.complement()) {
                nets_checked += 1;
                if !net_limits(&net, space)?.is_disjoint(&a) {
                    open_by_nets = false;
                    break;
                }
            }
        }
        entries.push(OpennessEntry {
            set: a,
            open,
            open_by_nets,
            witness,
            nets_checked,
        });
    }
    Ok(NetOpennessReport { entries })
}

/// Precomputed nets and limits in a domain space, reused across many maps
/// out of it.
#[derive(Clone, Debug)]
pub struct ContinuityProbe {
    nets: Vec<(Net, PointSet)>,
}

impl ContinuityProbe {
    /// The openness witnesses of every non-open subset, plus the sequence
    /// catalog.
    pub fn new(domain: &FiniteSpace) -> Result<Self> {
        let mut nets = Vec::new();
        for a in PointSet::all_subsets(domain.carrier_size()) {
            if let Some(w) = openness_witness(domain, &a)? {
                let lim = net_limits(&w.net, domain)?;
                nets.push((w.net, lim));
            }
        }
        let points: Vec<usize> = (0..domain.carrier_size()).collect();
        for s in sequence_catalog(&points) {
            let net = Net::Sequence(s);
            let lim = net_limits(&net, domain)?;
            nets.push((net, lim));
        }
        Ok(ContinuityProbe { nets })
    }

    pub fn len(&self) -> usize {
        self.nets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nets.is_empty()
    }

    /// First probe net converging to `y` whose image does not converge to
    /// `f(y)`.
    pub fn preservation_failure(
        &self,
        f: &PointMap,
        codomain: &FiniteSpace,
    ) -> Result<Option<NetWitness>> {
        for (net, lim) in &self.nets {
            if lim.is_empty() {
                continue;
            }
            let image = net_limits(&net.map(f), codomain)?;
            if let Some(y) = lim.iter().find(|&y| !image.contains(f.apply(y))) {
                return Ok(Some(NetWitness {
                    net: net.clone(),
                    limit: y,
                }));
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityReport {
    pub by_preimage: bool,
    pub by_nets: bool,
    pub witness: Option<NetWitness>,
}

impl ContinuityReport {
    pub fn agrees(&self) -> bool {
        self.by_preimage == self.by_nets
    }
}

pub fn verify_net_continuity(
    f: &PointMap,
    from: &FiniteSpace,
    to: &FiniteSpace,
) -> Result<ContinuityReport> {
    let probe = ContinuityProbe::new(from)?;
    verify_net_continuity_with(&probe, f, from, to)
}

/// As [`verify_net_continuity`], with the domain's probe nets supplied.
pub fn verify_net_continuity_with(
    probe: &ContinuityProbe,
    f: &PointMap,
    from: &FiniteSpace,
    to: &FiniteSpace,
) -> Result<ContinuityReport> {
    let by_preimage = f.is_continuous(from, to)?;
    let witness = probe.preservation_failure(f, to)?;
    Ok(ContinuityReport {
        by_preimage,
        by_nets: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleLimitWitness {
    pub net: Net,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HausdorffNetReport {
    pub hausdorff: bool,
    pub unique_limits: bool,
    pub witness: Option<DoubleLimitWitness>,
}

impl HausdorffNetReport {
    pub fn agrees(&self) -> bool {
        self.hausdorff == self.unique_limits
    }
}

/// Hausdorff iff no net has two distinct limits. For a non-Hausdorff space
/// the witness is the net over `N(x) × N(y)` with `x_(U,V) = min(U ∩ V)`.
pub fn verify_hausdorff_net(space: &FiniteSpace) -> Result<HausdorffNetReport> {
    let n = space.carrier_size();
    let hausdorff = space.is_hausdorff();
    let pair = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| space.disjoint_neighborhoods(x, y).is_none());
    let witness = match pair {
        Some((x, y)) => {
            let (nx, lx) = neighborhood_directed(space, x)?;
            let (ny, ly) = neighborhood_directed(space, y)?;
            let index = product_directed(&nx, &ny);
            let k = ly.len();
            let values = (0..index.size())
                .map(|i| {
                    lx[i / k]
                        .intersection(&ly[i % k])
                        .first()
                        .expect("neighbourhoods meet")
                })
                .collect();
            let net = Net::finite(index, values)?;
            let lim = net_limits(&net, space)?;
            (lim.contains(x) && lim.contains(y)).then_some(DoubleLimitWitness {
                net,
                first: x,
                second: y,
            })
        }
        None => {
            let mut found = None;
            for net in net_catalog(&space.full()) {
                let lim = net_limits(&net, space)?;
                if lim.len() >= 2 {
                    let mut it = lim.iter();
                    let (first, second) = (it.next().unwrap(), it.next().unwrap());
                    found = Some(DoubleLimitWitness { net, first, second });
                    break;
                }
            }
            found
        }
    };
    Ok(HausdorffNetReport {
        hausdorff,
        unique_limits: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactSubnetReport {
    pub nets_checked: usize,
    /// Catalog nets without a cluster point or whose constructed subnet
    /// failed.
    pub failures: Vec<Net>,
}

impl CompactSubnetReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every catalog net has a cluster point, and the subnet built from its
/// smallest cluster point is a subnet converging to it.
pub fn verify_compact_subnets(space: &FiniteSpace) -> Result<CompactSubnetReport> {
    let mut failures = Vec::new();
    let catalog = net_catalog(&space.full());
    for net in &catalog {
        let Some(y) = cluster_points(net, space)?.first() else {
            failures.push(net.clone());
            continue;
        };
        let out = subnet_from_cluster(net, space, y)?;
        let ok =
            is_subnet(&out.map, net, &out.subnet)? && net_limits(&out.subnet, space)?.contains(y);
        if !ok {
            failures.push(net.clone());
        }
    }
    Ok(CompactSubnetReport {
        nets_checked: catalog.len(),
        failures,
    })
}
