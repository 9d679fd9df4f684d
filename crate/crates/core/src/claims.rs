//! Exhaustive checks of each convergence result over every topology on a
//! fixed number of points, reported as verdicts.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::filters::{
    check_compact_ultrafilters, check_tychonoff, enumerate_filters, eventuality_filter,
    filter_limits, filter_pair_net, ultrafilter_refine,
};
use crate::finite_top::{
    check_fip_equivalence, enumerate_topologies, is_compact_by_covers, quotient, FiniteSpace,
    Partition, PointMap, PointSet, MAX_ENUMERATION,
};
use crate::nets::{
    net_catalog, net_limits, verify_compact_subnets, verify_hausdorff_net,
    verify_net_continuity_with, verify_net_openness, ContinuityProbe, Net,
};
use crate::sequences::{
    check_lemma_seq, first_countable_witness, is_sequential, is_sequentially_open,
    sequence_preservation_failure,
};
use crate::symbolic::{franklin_build, franklin_check_open_reflection, FranklinPresentation};

/// Claim tags accepted by [`verify_claim`].
pub const CLAIM_TAGS: [&str; 13] = [
    "openseqopen",
    "firstcountableseq",
    "lemmaseq",
    "seq-continuity",
    "quotientseq",
    "franklin",
    "netsopen",
    "netscontinuous",
    "hausdorff-nets",
    "compact-subnets",
    "filter-net-limits",
    "ultrafilter-refine",
    "tychonoff-finite",
];

/// The outcome of one claim check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub n: usize,
    pub spaces: usize,
    pub cases: usize,
    /// The first counterexample found, if any.
    pub failure: Option<String>,
    /// A representative certificate from a passing run.
    pub example: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// `key=value` lines.
    pub fn block(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "claim={}", self.claim);
        let _ = writeln!(
            out,
            "status={}",
            if self.passed() { "pass" } else { "fail" }
        );
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "spaces={}", self.spaces);
        let _ = writeln!(out, "cases={}", self.cases);
        let witness = self
            .failure
            .as_deref()
            .or(self.example.as_deref())
            .unwrap_or("-");
        let _ = writeln!(out, "witness={witness}");
        out
    }
}

/// `[- 0 0,1]`: the open sets of a space.
pub fn space_label(space: &FiniteSpace) -> String {
    let opens: Vec<String> = space.opens().iter().map(|u| u.to_string()).collect();
    format!("[{}]", opens.join(" "))
}

struct Tally {
    cases: usize,
    failure: Option<String>,
    example: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure: None,
            example: None,
        }
    }

    /// Counts a case; records `describe()` as the failure when `ok` is false.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn example(&mut self, describe: impl FnOnce() -> String) {
        if self.example.is_none() {
            self.example = Some(describe());
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }
}

/// Largest `n` per claim. Claims that sweep pairs of spaces stop at 3.
pub fn max_n(tag: &str) -> usize {
    match tag {
        "seq-continuity" | "netscontinuous" | "tychonoff-finite" => 3,
        _ => MAX_ENUMERATION,
    }
}

/// Runs the checks for `tag` over every topology on exactly `n` points.
pub fn verify_claim(tag: &str, n: usize) -> Result<Verdict> {
    if !CLAIM_TAGS.contains(&tag) {
        return Err(Error::UnknownClaim(tag.to_string()));
    }
    let max = max_n(tag);
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    let tops = enumerate_topologies(n)?;
    let mut t = Tally::new();
    match tag {
        "openseqopen" => open_seq_open(&tops, &mut t)?,
        "firstcountableseq" => first_countable_seq(&tops, &mut t)?,
        "lemmaseq" => lemma_seq(&tops, &mut t)?,
        "seq-continuity" => seq_continuity(&tops, &mut t)?,
        "quotientseq" => quotient_seq(&tops, &mut t)?,
        "franklin" => franklin(&tops, &mut t)?,
        "netsopen" => nets_open(&tops, &mut t)?,
        "netscontinuous" => nets_continuous(&tops, &mut t)?,
        "hausdorff-nets" => hausdorff_nets(&tops, &mut t)?,
        "compact-subnets" => compact_subnets(&tops, &mut t)?,
        "filter-net-limits" => filter_net_limits(&tops, &mut t)?,
        "ultrafilter-refine" => ultrafilter_refinement(n, &tops, &mut t)?,
        "tychonoff-finite" => tychonoff(&tops, &mut t)?,
        _ => unreachable!("tag checked above"),
    }
    Ok(Verdict {
        claim: tag.to_string(),
        n,
        spaces: tops.len(),
        cases: t.cases,
        failure: t.failure,
        example: t.example,
    })
}

fn open_seq_open(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        for a in PointSet::all_subsets(s.carrier_size()) {
            let open = s.is_open(&a)?;
            let r = is_sequentially_open(s, &a)?;
            t.check(!open || r.sequentially_open, || {
                format!(
                    "space={} set={a} open but not sequentially open",
                    space_label(s)
                )
            });
            if let Some(w) = &r.witness {
                t.example(|| {
                    format!(
                        "space={} set={a} sequence={} limit={}",
                        space_label(s),
                        w.sequence,
                        w.limit
                    )
                });
            }
        }
    }
    Ok(())
}

fn first_countable_seq(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        for x in 0..s.carrier_size() {
            let b = first_countable_witness(s, x)?;
            t.check(b.is_basis(s)?, || {
                format!(
                    "space={} point={x} minimal open is not a basis",
                    space_label(s)
                )
            });
        }
        t.check(is_sequential(s)?, || {
            format!("space={} not sequential", space_label(s))
        });
        if s.carrier_size() > 0 {
            let b = s.minimal_open(0)?;
            t.example(|| format!("space={} basis at 0: [{b}]", space_label(s)));
        }
    }
    Ok(())
}

fn lemma_seq(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        for a in PointSet::all_subsets(s.carrier_size()) {
            let r = check_lemma_seq(s, &a)?;
            t.check(r.holds(), || {
                format!(
                    "space={} set={a} sequentially_open={} tails_stay_inside={}",
                    space_label(s),
                    r.sequentially_open,
                    r.tails_stay_inside
                )
            });
        }
    }
    Ok(())
}

fn seq_continuity(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s1 in tops {
        let n = s1.carrier_size();
        for s2 in tops {
            for f in PointMap::all_maps(n, n) {
                let continuous = f.is_continuous(s1, s2)?;
                let failure = sequence_preservation_failure(&f, s1, s2)?;
                t.check(continuous == failure.is_none(), || {
                    format!(
                        "from={} to={} map={:?} continuous={continuous}",
                        space_label(s1),
                        space_label(s2),
                        f.values()
                    )
                });
                if let Some(w) = failure {
                    t.example(|| {
                        format!(
                            "from={} to={} map={:?} sequence={} limit={}",
                            space_label(s1),
                            space_label(s2),
                            f.values(),
                            w.sequence,
                            w.limit
                        )
                    });
                }
                if t.done() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn quotient_seq(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        let n = s.carrier_size();
        for p in Partition::all(n) {
            let (q, pi) = quotient(s, &p)?;
            t.check(is_sequential(&q)?, || {
                format!(
                    "space={} partition={p:?} quotient not sequential",
                    space_label(s)
                )
            });
            for a in PointSet::all_subsets(q.carrier_size()) {
                let reflected = s.is_open(&pi.preimage(&a))?;
                t.check(q.is_open(&a)? == reflected, || {
                    format!(
                        "space={} partition={p:?} set={a} openness not reflected",
                        space_label(s)
                    )
                });
            }
            t.check(pi.is_continuous(s, &q)?, || {
                format!(
                    "space={} partition={p:?} projection not continuous",
                    space_label(s)
                )
            });
        }
    }
    Ok(())
}

fn franklin(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        let p = FranklinPresentation::witness_complete(s)?;
        let f = franklin_build(&p);
        t.check(f.is_surjective(), || {
            format!("space={} map not surjective", space_label(s))
        });
        for a in PointSet::all_subsets(s.carrier_size()) {
            let r = franklin_check_open_reflection(&p, &a)?;
            t.check(r.agrees(), || {
                format!(
                    "space={} set={a} open={} preimage_open={}",
                    space_label(s),
                    r.open_in_base,
                    r.preimage_open
                )
            });
            if let Some(c) = r.failing_copy {
                t.example(|| {
                    format!(
                        "space={} set={a} sample={} trace={}",
                        space_label(s),
                        p.samples()[c],
                        f.preimage(c, &a)
                    )
                });
            }
        }
    }
    Ok(())
}

fn nets_open(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        let r = verify_net_openness(s)?;
        for e in &r.entries {
            t.check(e.open == e.open_by_nets, || {
                format!(
                    "space={} set={} open={} open_by_nets={}",
                    space_label(s),
                    e.set,
                    e.open,
                    e.open_by_nets
                )
            });
            if let Some(w) = &e.witness {
                t.example(|| {
                    format!(
                        "space={} set={} net={:?} limit={}",
                        space_label(s),
                        e.set,
                        w.net,
                        w.limit
                    )
                });
            }
        }
    }
    Ok(())
}

fn nets_continuous(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    let probes = tops
        .iter()
        .map(ContinuityProbe::new)
        .collect::<Result<Vec<_>>>()?;
    for (s1, probe) in tops.iter().zip(&probes) {
        let n = s1.carrier_size();
        for s2 in tops {
            for f in PointMap::all_maps(n, n) {
                let r = verify_net_continuity_with(probe, &f, s1, s2)?;
                t.check(r.agrees(), || {
                    format!(
                        "from={} to={} map={:?} by_preimage={} by_nets={}",
                        space_label(s1),
                        space_label(s2),
                        f.values(),
                        r.by_preimage,
                        r.by_nets
                    )
                });
                if let Some(w) = &r.witness {
                    t.example(|| {
                        format!(
                            "from={} to={} map={:?} net={:?} limit={}",
                            space_label(s1),
                            space_label(s2),
                            f.values(),
                            w.net,
                            w.limit
                        )
                    });
                }
                if t.done() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn hausdorff_nets(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        let r = verify_hausdorff_net(s)?;
        t.check(r.agrees(), || {
            format!(
                "space={} hausdorff={} unique_limits={}",
                space_label(s),
                r.hausdorff,
                r.unique_limits
            )
        });
        t.check(!r.hausdorff || s.is_discrete(), || {
            format!("space={} Hausdorff but not discrete", space_label(s))
        });
        if let Some(w) = &r.witness {
            t.example(|| {
                format!(
                    "space={} net={:?} limits={},{}",
                    space_label(s),
                    w.net,
                    w.first,
                    w.second
                )
            });
        }
    }
    Ok(())
}

fn compact_subnets(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s in tops {
        let r = verify_compact_subnets(s)?;
        t.cases += r.nets_checked.saturating_sub(1);
        t.check(r.passed(), || {
            format!(
                "space={} net={:?} has no convergent subnet",
                space_label(s),
                r.failures[0]
            )
        });
        let fip = check_fip_equivalence(s)?;
        t.check(fip.holds(), || {
            format!("space={} FIP equivalence fails", space_label(s))
        });
        t.check(is_compact_by_covers(s, None)?.compact, || {
            format!("space={} not compact by covers", space_label(s))
        });
    }
    t.example(|| "every catalog net has a cluster point and a subnet converging to it".into());
    Ok(())
}

fn filter_net_limits(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    let Some(first) = tops.first() else {
        return Ok(());
    };
    let n = first.carrier_size();
    let catalog = net_catalog(&first.full());
    let filters = catalog
        .iter()
        .map(|net| eventuality_filter(net, n))
        .collect::<Result<Vec<_>>>()?;
    let back = filters
        .iter()
        .map(filter_pair_net)
        .collect::<Result<Vec<Net>>>()?;
    for s in tops {
        for ((net, f), pair) in catalog.iter().zip(&filters).zip(&back) {
            let lim = net_limits(net, s)?;
            let flim = filter_limits(f, s)?;
            t.check(lim == flim && net_limits(pair, s)? == flim, || {
                format!(
                    "space={} net={net:?} net_limits={lim} filter_limits={flim}",
                    space_label(s)
                )
            });
        }
    }
    Ok(())
}

fn ultrafilter_refinement(n: usize, tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for f in enumerate_filters(n)? {
        let u = ultrafilter_refine(&f);
        t.check(
            f.is_subfamily_of(u.filter()) && u.filter().is_ultrafilter(),
            || {
                format!(
                    "filter kernel={} refined to point {}",
                    f.kernel(),
                    u.point()
                )
            },
        );
        t.example(|| {
            format!(
                "filter kernel={} refined to point {}",
                f.kernel(),
                u.point()
            )
        });
    }
    for s in tops {
        let r = check_compact_ultrafilters(s)?;
        t.check(r.agrees(), || {
            format!(
                "space={} compact={} ultrafilters_converge={}",
                space_label(s),
                r.compact_by_covers,
                r.every_ultrafilter_converges
            )
        });
    }
    Ok(())
}

fn tychonoff(tops: &[FiniteSpace], t: &mut Tally) -> Result<()> {
    for s1 in tops {
        for s2 in tops {
            let bad = check_tychonoff(s1, s2)?;
            t.check(bad.is_empty(), || {
                let b = &bad[0];
                format!(
                    "s1={} s2={} ultrafilter at {} projections={} direct={}",
                    space_label(s1),
                    space_label(s2),
                    b.ultrafilter,
                    b.by_projections,
                    b.direct
                )
            });
        }
    }
    Ok(())
}
