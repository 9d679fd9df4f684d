//! Acceptance gate. Each criterion is checked against an oracle written
//! here from the definitions, prints one PASS/FAIL line and must finish
//! inside its pinned time limit.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use netlab::filters::{
    enumerate_filters, enumerate_ultrafilters, eventuality_filter, filter_limits, tychonoff_limit,
    ultrafilter_refine, Filter,
};
use netlab::finite_top::{check_fip_equivalence, enumerate_topologies, product, projections};
use netlab::nets::{
    cluster_points, is_subnet, net_catalog, net_limits, openness_witness, sequence_catalog,
    subnet_from_cluster, verify_hausdorff_net, verify_net_continuity_with, ContinuityProbe, Net,
};
use netlab::sequences::{is_sequentially_open, EpSequence};
use netlab::symbolic::{
    cc_certificate, diagonal_certificate, diagonal_witness, fan_defeat_basis, fan_is_open,
    franklin_build, franklin_check_open_reflection, ord_no_finite_subcover, ord_sup,
    product_pointwise_limit, union_of_terms, CnfOrdinal, FanSet, FranklinPresentation, NatSet,
    OrdinalPoint, PointwiseLimit, SetDescriptor, TagRegistry,
};
use netlab::{FiniteSpace, PointMap, PointSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

const LIMIT_ENUMERATION: Duration = Duration::from_secs(10);
const LIMIT_SEQUENTIAL: Duration = Duration::from_secs(1);
const LIMIT_NETS_OPEN: Duration = Duration::from_secs(10);
const LIMIT_NETS_CONTINUOUS: Duration = Duration::from_secs(60);
const LIMIT_HAUSDORFF: Duration = Duration::from_secs(10);
const LIMIT_COMPACT: Duration = Duration::from_secs(10);
const LIMIT_FILTERS: Duration = Duration::from_secs(30);
const LIMIT_COUNTEREXAMPLES: Duration = Duration::from_secs(30);
const LIMIT_DETERMINISM: Duration = Duration::from_secs(60);

/// Sampled cases per symbolic property.
const SAMPLES: u32 = 2000;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

// ---- oracles -------------------------------------------------------------

/// A family of subsets of `n` points (as bitmasks) is a topology.
fn is_topology(n: usize, family: &BTreeSet<u64>) -> bool {
    let full = (1u64 << n) - 1;
    family.contains(&0)
        && family.contains(&full)
        && family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.contains(&(a & b)) && family.contains(&(a | b)))
        })
}

/// Counts topologies by testing every family of subsets.
fn count_topologies_naive(n: usize) -> usize {
    let subsets = 1usize << n;
    (0u64..1 << subsets)
        .filter(|mask| {
            let family: BTreeSet<u64> =
                (0..subsets as u64).filter(|s| mask >> s & 1 == 1).collect();
            is_topology(n, &family)
        })
        .count()
}

fn opens_of(s: &FiniteSpace) -> BTreeSet<u64> {
    s.opens().iter().map(PointSet::bits).collect()
}

fn eventually_in(net: &Net, u: &PointSet) -> bool {
    match net {
        Net::Sequence(s) => s.cycle().iter().all(|&x| u.contains(x)),
        Net::Finite { index, values } => (0..values.len())
            .any(|d| (0..values.len()).all(|e| !index.leq(d, e) || u.contains(values[e]))),
    }
}

fn frequently_in(net: &Net, u: &PointSet) -> bool {
    match net {
        Net::Sequence(s) => s.cycle().iter().any(|&x| u.contains(x)),
        Net::Finite { index, values } => (0..values.len())
            .all(|d| (0..values.len()).any(|e| index.leq(d, e) && u.contains(values[e]))),
    }
}

fn limits_oracle(net: &Net, s: &FiniteSpace) -> PointSet {
    let n = s.carrier_size();
    let pts = (0..n).filter(|&y| {
        s.opens()
            .iter()
            .filter(|u| u.contains(y))
            .all(|u| eventually_in(net, u))
    });
    PointSet::from_points(n, pts).unwrap()
}

fn clusters_oracle(net: &Net, s: &FiniteSpace) -> PointSet {
    let n = s.carrier_size();
    let pts = (0..n).filter(|&y| {
        s.opens()
            .iter()
            .filter(|u| u.contains(y))
            .all(|u| frequently_in(net, u))
    });
    PointSet::from_points(n, pts).unwrap()
}

fn filter_limits_oracle(f: &Filter, s: &FiniteSpace) -> PointSet {
    let n = s.carrier_size();
    let pts = (0..n).filter(|&y| {
        s.opens()
            .iter()
            .filter(|u| u.contains(y))
            .all(|u| f.sets().contains(u))
    });
    PointSet::from_points(n, pts).unwrap()
}

fn spaces_upto(n: usize) -> Vec<FiniteSpace> {
    (0..=n)
        .flat_map(|k| enumerate_topologies(k).unwrap())
        .collect()
}

/// CNF comparison from the term lists: first differing term decides, a
/// larger exponent or equal exponent with larger coefficient wins, and a
/// proper prefix is smaller.
fn cnf_cmp(a: &CnfOrdinal, b: &CnfOrdinal) -> std::cmp::Ordering {
    for (x, y) in a.terms().iter().zip(b.terms()) {
        let c = x.0.cmp(&y.0).then(x.1.cmp(&y.1));
        if c.is_ne() {
            return c;
        }
    }
    a.terms().len().cmp(&b.terms().len())
}

/// Runs `test` on `SAMPLES` deterministic draws from `strategy`.
fn sample<S: Strategy>(
    name: &str,
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases: SAMPLES,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
        .run(strategy, test)
        .map_err(|err| format!("{name}: {err}"))
}

// ---- criteria ------------------------------------------------------------

fn c1_enumeration() -> Check {
    let expected_from_oracle: Vec<usize> = (0..=4).map(count_topologies_naive).collect();
    let mut counts = Vec::new();
    for n in 0..=4 {
        let tops = enumerate_topologies(n).map_err(e)?;
        let distinct: BTreeSet<Vec<u64>> = tops
            .iter()
            .map(|s| opens_of(s).into_iter().collect())
            .collect();
        ensure(distinct.len() == tops.len(), || {
            format!("duplicates at n={n}")
        })?;
        for s in &tops {
            ensure(is_topology(n, &opens_of(s)), || {
                format!("non-topology at n={n}")
            })?;
        }
        counts.push(tops.len());
    }
    ensure(counts == expected_from_oracle, || {
        format!("counts {counts:?} vs oracle {expected_from_oracle:?}")
    })?;
    Ok(format!("counts {counts:?}"))
}

fn c2_sequential() -> Check {
    let spaces = enumerate_topologies(3).map_err(e)?;
    let mut cases = 0;
    for s in &spaces {
        for a in PointSet::all_subsets(3) {
            let open = opens_of(s).contains(&a.bits());
            let r = is_sequentially_open(s, &a).map_err(e)?;
            // a sequence valued outside `a` converging into `a`
            let escapes = sequence_catalog(&a.complement().iter().collect::<Vec<_>>())
                .iter()
                .any(|q| !limits_oracle(&Net::Sequence(q.clone()), s).is_disjoint(&a));
            ensure(open == r.sequentially_open && open == !escapes, || {
                format!("space {:?} set {a}", opens_of(s))
            })?;
            if let Some(w) = r.witness {
                let net = Net::Sequence(w.sequence.clone());
                ensure(
                    a.contains(w.limit)
                        && w.sequence.values().all(|&x| !a.contains(x))
                        && limits_oracle(&net, s).contains(w.limit),
                    || format!("bad witness for {a}"),
                )?;
            }
            cases += 1;
        }
    }
    Ok(format!("{} spaces, {cases} subsets", spaces.len()))
}

fn c3_nets_open() -> Check {
    let mut witnesses = 0;
    let mut nets = 0;
    for s in spaces_upto(3) {
        for a in PointSet::all_subsets(s.carrier_size()) {
            let open = opens_of(&s).contains(&a.bits());
            let w = openness_witness(&s, &a).map_err(e)?;
            if open {
                ensure(w.is_none(), || format!("witness for open set {a}"))?;
                for net in net_catalog(&a.complement()) {
                    ensure(limits_oracle(&net, &s).is_disjoint(&a), || {
                        format!("catalog net converges into open {a}")
                    })?;
                    nets += 1;
                }
            } else {
                let w = w.ok_or_else(|| format!("no witness for non-open {a}"))?;
                ensure(
                    a.contains(w.limit)
                        && w.net.values().all(|x| !a.contains(x))
                        && limits_oracle(&w.net, &s).contains(w.limit),
                    || format!("bad witness for {a}"),
                )?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} witnesses, {nets} catalog nets"))
}

fn c4_nets_continuous() -> Check {
    let spaces = enumerate_topologies(3).map_err(e)?;
    let probes = spaces
        .iter()
        .map(ContinuityProbe::new)
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?;
    let maps: Vec<PointMap> = PointMap::all_maps(3, 3).collect();
    let mut cases = 0;
    for (from, probe) in spaces.iter().zip(&probes) {
        let from_opens = opens_of(from);
        for to in &spaces {
            for f in &maps {
                let continuous = to
                    .opens()
                    .iter()
                    .all(|v| from_opens.contains(&f.preimage(v).bits()));
                let r = verify_net_continuity_with(probe, f, from, to).map_err(e)?;
                ensure(r.by_nets == continuous, || format!("map {:?}", f.values()))?;
                if let Some(w) = r.witness {
                    ensure(
                        limits_oracle(&w.net, from).contains(w.limit)
                            && !limits_oracle(&w.net.map(f), to).contains(f.apply(w.limit)),
                        || format!("bad witness for {:?}", f.values()),
                    )?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (space, space, map) triples"))
}

fn c5_hausdorff() -> Check {
    let mut hausdorff = 0;
    for s in spaces_upto(3) {
        let n = s.carrier_size();
        let direct = (0..n).all(|x| {
            (0..n).all(|y| {
                x == y
                    || s.opens().iter().any(|u| {
                        s.opens()
                            .iter()
                            .any(|v| u.contains(x) && v.contains(y) && u.is_disjoint(v))
                    })
            })
        });
        let r = verify_hausdorff_net(&s).map_err(e)?;
        ensure(r.hausdorff == direct && r.unique_limits == direct, || {
            format!("space {:?}", opens_of(&s))
        })?;
        if let Some(w) = r.witness {
            let lim = limits_oracle(&w.net, &s);
            ensure(
                w.first != w.second && lim.contains(w.first) && lim.contains(w.second),
                || "bad double-limit witness".into(),
            )?;
        }
        hausdorff += direct as usize;
    }
    for s in spaces_upto(4) {
        let n = s.carrier_size();
        if s.is_hausdorff() {
            ensure(s.opens().len() == 1 << n, || {
                format!("Hausdorff but not discrete: {:?}", opens_of(&s))
            })?;
        }
    }
    Ok(format!(
        "{hausdorff} Hausdorff spaces up to 3 points, all discrete up to 4"
    ))
}

fn c6_compact() -> Check {
    let mut nets = 0;
    let mut families = 0;
    for s in spaces_upto(3) {
        for net in net_catalog(&s.full()) {
            let cl = clusters_oracle(&net, &s);
            ensure(cluster_points(&net, &s).map_err(e)? == cl, || {
                "cluster points".into()
            })?;
            if s.carrier_size() == 0 {
                continue;
            }
            let y = cl.first().ok_or("empty cluster set")?;
            let sub = subnet_from_cluster(&net, &s, y).map_err(e)?;
            ensure(is_subnet(&sub.map, &net, &sub.subnet).map_err(e)?, || {
                "not a subnet".into()
            })?;
            ensure(limits_oracle(&sub.subnet, &s).contains(y), || {
                "subnet does not converge".into()
            })?;
            nets += 1;
        }
        let fip = check_fip_equivalence(&s).map_err(e)?;
        // every finite space is compact
        ensure(fip.holds() && fip.compact_by_covers, || {
            "FIP ⇔ covers".into()
        })?;
        families += fip.families_checked;
    }
    Ok(format!("{nets} nets, {families} closed families"))
}

fn c7_filters() -> Check {
    let mut nets = 0;
    for s in spaces_upto(3) {
        let n = s.carrier_size();
        for net in net_catalog(&s.full()) {
            if n == 0 {
                continue;
            }
            let f = eventuality_filter(&net, n).map_err(e)?;
            let expected: Vec<PointSet> = PointSet::all_subsets(n)
                .filter(|a| eventually_in(&net, a))
                .collect();
            ensure(
                f.sets().iter().collect::<BTreeSet<_>>() == expected.iter().collect(),
                || "eventuality filter".into(),
            )?;
            let lim = net_limits(&net, &s).map_err(e)?;
            ensure(
                lim == filter_limits(&f, &s).map_err(e)? && lim == limits_oracle(&net, &s),
                || "net limits vs filter limits".into(),
            )?;
            ensure(filter_limits_oracle(&f, &s) == lim, || {
                "filter limits oracle".into()
            })?;
            nets += 1;
        }
    }

    let mut filters = 0;
    for n in 1..=3 {
        for f in enumerate_filters(n).map_err(e)? {
            let u = ultrafilter_refine(&f);
            let us = u.filter().sets();
            ensure(f.sets().iter().all(|a| us.contains(a)), || {
                "refinement drops a set".into()
            })?;
            let decides =
                PointSet::all_subsets(n).all(|a| us.contains(&a) != us.contains(&a.complement()));
            ensure(decides && !us.contains(&PointSet::empty(n)), || {
                "not an ultrafilter".into()
            })?;
            filters += 1;
        }
    }

    let small: Vec<FiniteSpace> = (1..=2)
        .flat_map(|k| enumerate_topologies(k).unwrap())
        .collect();
    let mut ultras = 0;
    for s1 in &small {
        for s2 in &small {
            let prod = product(s1, s2).map_err(e)?;
            let (p1, p2) = projections(s1.carrier_size(), s2.carrier_size());
            for u in enumerate_ultrafilters(prod.carrier_size()).map_err(e)? {
                let k = u.point();
                let expected = PointSet::from_points(
                    prod.carrier_size(),
                    (0..prod.carrier_size()).filter(|&y| {
                        s1.opens()
                            .iter()
                            .all(|a| !a.contains(p1.apply(y)) || a.contains(p1.apply(k)))
                            && s2
                                .opens()
                                .iter()
                                .all(|b| !b.contains(p2.apply(y)) || b.contains(p2.apply(k)))
                    }),
                )
                .unwrap();
                ensure(
                    tychonoff_limit(&u, s1, s2).map_err(e)? == expected
                        && filter_limits(u.filter(), &prod).map_err(e)? == expected,
                    || format!("Tychonoff at {k}"),
                )?;
                ultras += 1;
            }
        }
    }
    Ok(format!(
        "{nets} nets, {filters} filters, {ultras} product ultrafilters"
    ))
}

fn c8_counterexamples() -> Check {
    // (a)
    let reg = TagRegistry::default();
    for atoms in [vec!["a"], vec!["a", "b"], vec!["x", "y", "z"]] {
        let c = cc_certificate(&SetDescriptor::finite(atoms), &reg).map_err(e)?;
        ensure(c.sequentially_open && !c.open && c.holds(), || "cc".into())?;
    }

    // (b)
    let cnf = prop::collection::btree_map(0u32..4, 1u64..4, 0..4).prop_map(|m| {
        CnfOrdinal::new(m.into_iter().rev().collect()).expect("strictly decreasing exponents")
    });
    let seq = (
        prop::collection::vec(cnf.clone(), 0..4),
        prop::collection::vec(cnf, 1..4),
    );
    sample("ordinal", &seq, |(prefix, cycle)| {
        let s = EpSequence::new(prefix, cycle).unwrap();
        let values: Vec<CnfOrdinal> = s.values().cloned().collect();
        let best = values.iter().max_by(|a, b| cnf_cmp(a, b)).unwrap().clone();
        let points: Vec<OrdinalPoint> = values.iter().cloned().map(OrdinalPoint::Cnf).collect();
        prop_assert_eq!(ord_sup(&points).unwrap(), OrdinalPoint::Cnf(best));
        let x = ord_no_finite_subcover(&values).unwrap();
        prop_assert!(values.iter().all(|a| cnf_cmp(a, &x).is_lt()));
        Ok(())
    })?;

    // (c)
    let term = prop::collection::btree_set(prop::sample::select(vec!["a", "b", "c", "d"]), 0..4);
    let terms = (
        prop::collection::vec(term.clone(), 0..4),
        prop::collection::vec(term, 1..4),
    );
    sample("product", &terms, |(prefix, cycle)| {
        let d = |t: &BTreeSet<&str>| SetDescriptor::finite(t.iter().copied());
        let s = EpSequence::new(
            prefix.iter().map(d).collect(),
            cycle.iter().map(d).collect(),
        )
        .unwrap();
        let union: BTreeSet<String> = prefix
            .iter()
            .chain(&cycle)
            .flatten()
            .map(|a| a.to_string())
            .collect();
        let all: BTreeSet<&str> = cycle.iter().flatten().copied().collect();
        let always: BTreeSet<String> = all
            .iter()
            .filter(|a| cycle.iter().all(|t| t.contains(*a)))
            .map(|a| a.to_string())
            .collect();
        prop_assert_eq!(union_of_terms(&s).unwrap(), union.clone());
        match product_pointwise_limit(&s).unwrap() {
            PointwiseLimit::Converges(l) => {
                prop_assert!(all.iter().all(|a| cycle.iter().all(|t| t.contains(a))));
                prop_assert_eq!(&l, &always);
                prop_assert!(l.is_subset(&union));
            }
            PointwiseLimit::Diverges { atom } => {
                prop_assert!(all.contains(atom.as_str()) && !always.contains(&atom));
            }
        }
        Ok(())
    })?;

    // (d): digit k of r is bit 63-k of r·2^64
    let indices = prop::collection::btree_set(0u32..64, 0..=20)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>());
    sample("binary-digits", &indices, |ks| {
        let r = diagonal_witness(&ks).unwrap();
        let fixed: u128 = ks
            .iter()
            .skip(1)
            .step_by(2)
            .map(|&k| 1u128 << (63 - k))
            .sum();
        prop_assert_eq!(
            &r,
            &BigRational::new(BigInt::from(fixed), BigInt::from(1u128 << 64))
        );
        for (n, &k) in ks.iter().enumerate() {
            prop_assert_eq!((fixed >> (63 - k)) & 1, (n % 2) as u128);
        }
        prop_assert!(diagonal_certificate(&ks).unwrap().alternates());
        Ok(())
    })?;

    // (e)
    let nat_cof = prop::collection::btree_set(0u64..6, 0..4).prop_map(NatSet::Cofinite);
    let candidate = (
        prop::collection::btree_map(0usize..10, nat_cof.clone(), 0..4),
        nat_cof,
    )
        .prop_map(|(exceptional, default)| FanSet {
            apex: true,
            exceptional,
            default,
        });
    sample("fan", &prop::collection::vec(candidate, 0..=8), |cands| {
        let d = fan_defeat_basis(&cands).unwrap();
        prop_assert!(d.neighborhood.apex && fan_is_open(&d.neighborhood));
        for (i, c) in cands.iter().enumerate() {
            let excluded =
                (0..=6u64).any(|m| c.contains_point(i, m) && !d.neighborhood.contains_point(i, m));
            prop_assert!(excluded, "candidate {} fits inside the neighbourhood", i);
        }
        Ok(())
    })?;

    // (f)
    let mut subsets = 0;
    for s in spaces_upto(3) {
        let p = FranklinPresentation::witness_complete(&s).map_err(e)?;
        ensure(franklin_build(&p).is_surjective(), || {
            "franklin map not onto".into()
        })?;
        for a in PointSet::all_subsets(s.carrier_size()) {
            let r = franklin_check_open_reflection(&p, &a).map_err(e)?;
            ensure(
                r.agrees() && r.open_in_base == opens_of(&s).contains(&a.bits()),
                || format!("franklin {:?} {a}", opens_of(&s)),
            )?;
            subsets += 1;
        }
    }
    Ok(format!(
        "(a)-(e) with {SAMPLES} samples each, (f) {subsets} subsets"
    ))
}

fn c9_determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_netlab");
    let commands: &[&[&str]] = &[
        &["verify", "all", "--n", "3"],
        &["verify", "all", "--n", "2", "--format", "verdict"],
        &["counterexample", "cc"],
        &["counterexample", "ordinal"],
        &["counterexample", "product"],
        &["counterexample", "binary-digits", "--indices", "0,3,5,9"],
        &["counterexample", "fan", "--candidates", "5"],
        &["counterexample", "franklin"],
    ];
    for args in commands {
        let once = || Command::new(bin).args(*args).output().map_err(e);
        let (a, b) = (once()?, once()?);
        ensure(a.status.success(), || {
            format!("{args:?} exited {}", a.status)
        })?;
        ensure(a.stdout == b.stdout && a.stderr == b.stderr, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(format!("{} commands", commands.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("topology enumeration", c1_enumeration, LIMIT_ENUMERATION),
        ("open ⇔ sequentially open", c2_sequential, LIMIT_SEQUENTIAL),
        ("openness by nets", c3_nets_open, LIMIT_NETS_OPEN),
        (
            "continuity by nets",
            c4_nets_continuous,
            LIMIT_NETS_CONTINUOUS,
        ),
        ("Hausdorff ⇔ unique limits", c5_hausdorff, LIMIT_HAUSDORFF),
        ("compactness and subnets", c6_compact, LIMIT_COMPACT),
        ("filter dictionary", c7_filters, LIMIT_FILTERS),
        (
            "counterexample certificates",
            c8_counterexamples,
            LIMIT_COUNTEREXAMPLES,
        ),
        ("determinism", c9_determinism, LIMIT_DETERMINISM),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(d) => (false, d),
        };
        failed += !ok as usize;
        println!(
            "criterion {}: {} {name} ({detail}) [{elapsed:.2?} / {limit:?}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
