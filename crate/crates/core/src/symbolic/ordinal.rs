//! Countable ordinals below `ω^ω` in Cantor normal form, plus a top point
//! `ω₁`, and the order topology on initial intervals.
//!
//! The CNF ordinals here have countable cofinality, so every sequence of
//! them is bounded by a CNF ordinal. A sequence converges iff it is
//! eventually constant or increases to a limit; eventually periodic tails
//! that are not constant oscillate, so the presentations cover both
//! convergent and divergent tail behaviour.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::EpSequence;

/// `ω^e₁·c₁ + … + ω^eₖ·cₖ` with `e₁ > … > eₖ` and every `cᵢ > 0`.
///
/// The derived order is the ordinal order: terms compare by exponent and
/// then coefficient, and a proper prefix is smaller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CnfOrdinal {
    terms: Vec<(u32, u64)>,
}

impl CnfOrdinal {
    pub fn new(terms: Vec<(u32, u64)>) -> Result<Self> {
        if terms.iter().any(|&(_, c)| c == 0) {
            return Err(Error::InvalidDescriptor(
                "CNF coefficients must be positive".into(),
            ));
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::InvalidDescriptor(
                "CNF exponents must be strictly decreasing".into(),
            ));
        }
        Ok(CnfOrdinal { terms })
    }

    pub fn zero() -> Self {
        CnfOrdinal::default()
    }

    pub fn nat(n: u64) -> Self {
        CnfOrdinal {
            terms: if n == 0 { vec![] } else { vec![(0, n)] },
        }
    }

    pub fn omega() -> Self {
        CnfOrdinal {
            terms: vec![(1, 1)],
        }
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(&(0, _)))
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn succ(&self) -> Self {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((0, c)) => *c += 1,
            _ => terms.push((0, 1)),
        }
        CnfOrdinal { terms }
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => f.write_str("ω")?,
                _ => write!(f, "ω^{e}")?,
            }
            if e > 0 && c > 1 {
                write!(f, "·{c}")?;
            }
        }
        Ok(())
    }
}

fn parse_term(s: &str) -> Result<(u32, u64)> {
    let bad = || Error::InvalidDescriptor(format!("bad ordinal term `{s}`"));
    let s = s.trim();
    let (base, coeff) = match s.find(['*', '·']) {
        Some(i) => {
            let rest = s[i..].chars().skip(1).collect::<String>();
            (&s[..i], rest.parse::<u64>().map_err(|_| bad())?)
        }
        None => (s, 1),
    };
    let base = base.trim();
    if let Ok(n) = base.parse::<u64>() {
        if coeff != 1 {
            return Err(bad());
        }
        return Ok((0, n));
    }
    let rest = base
        .strip_prefix("omega")
        .or_else(|| base.strip_prefix('w'))
        .or_else(|| base.strip_prefix('ω'))
        .ok_or_else(bad)?;
    let exp = match rest.strip_prefix('^') {
        Some(e) => e.parse::<u32>().map_err(|_| bad())?,
        None if rest.is_empty() => 1,
        None => return Err(bad()),
    };
    Ok((exp, coeff))
}

/// Accepts `0`, `5`, `w`, `ω`, `omega`, `w^2*3+w+5`, `ω^2·3+ω+5`.
impl FromStr for CnfOrdinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for part in s.split('+') {
            let (e, c) = parse_term(part)?;
            if c > 0 {
                terms.push((e, c));
            }
        }
        CnfOrdinal::new(terms)
    }
}

/// A point of `[0, ω₁]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrdinalPoint {
    Cnf(CnfOrdinal),
    /// The first uncountable ordinal, above every CNF value.
    Omega1,
}

impl OrdinalPoint {
    pub fn nat(n: u64) -> Self {
        OrdinalPoint::Cnf(CnfOrdinal::nat(n))
    }

    pub fn as_cnf(&self) -> Option<&CnfOrdinal> {
        match self {
            OrdinalPoint::Cnf(c) => Some(c),
            OrdinalPoint::Omega1 => None,
        }
    }

    /// `0` or a successor: the points that are isolated.
    pub fn is_isolated(&self) -> bool {
        match self {
            OrdinalPoint::Cnf(c) => !c.is_limit(),
            OrdinalPoint::Omega1 => false,
        }
    }
}

impl From<CnfOrdinal> for OrdinalPoint {
    fn from(c: CnfOrdinal) -> Self {
        OrdinalPoint::Cnf(c)
    }
}

impl fmt::Display for OrdinalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdinalPoint::Cnf(c) => c.fmt(f),
            OrdinalPoint::Omega1 => f.write_str("ω₁"),
        }
    }
}

impl FromStr for OrdinalPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "omega1" | "w1" | "ω1" | "ω₁" => Ok(OrdinalPoint::Omega1),
            t => Ok(OrdinalPoint::Cnf(t.parse()?)),
        }
    }
}

pub fn ord_leq(a: &OrdinalPoint, b: &OrdinalPoint) -> bool {
    a <= b
}

pub fn ord_max(values: &[OrdinalPoint]) -> Result<OrdinalPoint> {
    values
        .iter()
        .max()
        .cloned()
        .ok_or_else(|| Error::EmptyInput("ordinal list".into()))
}

/// The supremum of finitely many points is their maximum; in particular a
/// list of CNF values has a CNF supremum.
pub fn ord_sup(values: &[OrdinalPoint]) -> Result<OrdinalPoint> {
    ord_max(values)
}

pub fn ord_succ(a: &OrdinalPoint) -> Result<OrdinalPoint> {
    match a {
        OrdinalPoint::Cnf(c) => Ok(OrdinalPoint::Cnf(c.succ())),
        OrdinalPoint::Omega1 => Err(Error::OutOfInterval("ω₁ has no successor here".into())),
    }
}

/// `[0, top]` when `closed_top`, otherwise `[0, top)`, with the order
/// topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinalInterval {
    pub top: OrdinalPoint,
    pub closed_top: bool,
}

impl OrdinalInterval {
    /// `[0, ω₁]`.
    pub fn closed_omega1() -> Self {
        OrdinalInterval {
            top: OrdinalPoint::Omega1,
            closed_top: true,
        }
    }

    /// `[0, ω₁)`.
    pub fn open_omega1() -> Self {
        OrdinalInterval {
            top: OrdinalPoint::Omega1,
            closed_top: false,
        }
    }

    pub fn contains(&self, p: &OrdinalPoint) -> bool {
        if self.closed_top {
            p <= &self.top
        } else {
            p < &self.top
        }
    }

    fn check(&self, p: &OrdinalPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfInterval(format!("{p} is not in {self}")))
        }
    }
}

impl fmt::Display for OrdinalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[0,{}{}",
            self.top,
            if self.closed_top { "]" } else { ")" }
        )
    }
}

/// The subsets of an ordinal interval whose openness is decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalSet {
    Singleton(OrdinalPoint),
    /// `[0, p)`.
    Below(OrdinalPoint),
    /// `(p, top]` (or `(p, top)`).
    Above(OrdinalPoint),
}

impl OrdinalSet {
    pub fn contains(&self, q: &OrdinalPoint) -> bool {
        match self {
            OrdinalSet::Singleton(p) => q == p,
            OrdinalSet::Below(p) => q < p,
            OrdinalSet::Above(p) => q > p,
        }
    }
}

/// Rays are open. A singleton `{p}` is open iff `p` is `0` or a successor:
/// every basic neighbourhood `(q, p]` of a limit `p` holds points below it.
pub fn ord_is_open(space: &OrdinalInterval, a: &OrdinalSet) -> Result<bool> {
    match a {
        OrdinalSet::Singleton(p) => {
            space.check(p)?;
            Ok(p.is_isolated())
        }
        OrdinalSet::Below(_) | OrdinalSet::Above(_) => Ok(true),
    }
}

/// Limits of a sequence in an ordinal interval.
///
/// A constant tail converges to its value and nowhere else. Otherwise,
/// with `u` the least cycle value, the open sets `[0, u]` and `(u, top]`
/// cover the interval and each misses infinitely many terms, so there is
/// no limit.
pub fn ord_seq_limits(
    s: &EpSequence<OrdinalPoint>,
    space: &OrdinalInterval,
) -> Result<Vec<OrdinalPoint>> {
    for v in s.values() {
        space.check(v)?;
    }
    let u = s.cycle().iter().min().expect("nonempty cycle").clone();
    if s.cycle().iter().all(|v| *v == u) {
        return Ok(vec![u]);
    }
    let low = OrdinalSet::Below(ord_succ(&u)?);
    let high = OrdinalSet::Above(u.clone());
    debug_assert!(ord_is_open(space, &low)? && ord_is_open(space, &high)?);
    debug_assert!(s.cycle().iter().any(|v| !low.contains(v)));
    debug_assert!(s.cycle().iter().any(|v| !high.contains(v)));
    Ok(vec![])
}

/// `{ω₁}` is sequentially open in `[0, ω₁]` but not open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega1Certificate {
    /// Sup of the sequence's values, a CNF ordinal.
    pub bound: CnfOrdinal,
    pub limits: Vec<OrdinalPoint>,
    pub singleton_open: bool,
}

impl Omega1Certificate {
    pub fn holds(&self) -> bool {
        !self.limits.contains(&OrdinalPoint::Omega1) && !self.singleton_open
    }
}

/// For a sequence of countable ordinals: its supremum is countable, so
/// `ω₁` is not among its limits, while `{ω₁}` is not open.
pub fn omega1_certificate(s: &EpSequence<CnfOrdinal>) -> Result<Omega1Certificate> {
    let space = OrdinalInterval::closed_omega1();
    let points = s.map(|c| OrdinalPoint::Cnf(c.clone()));
    let values: Vec<OrdinalPoint> = points.values().cloned().collect();
    let OrdinalPoint::Cnf(bound) = ord_sup(&values)? else {
        unreachable!("CNF values have a CNF supremum")
    };
    Ok(Omega1Certificate {
        bound,
        limits: ord_seq_limits(&points, &space)?,
        singleton_open: ord_is_open(&space, &OrdinalSet::Singleton(OrdinalPoint::Omega1))?,
    })
}

/// An increasing list of positions `head`, then `start + off + k·period`
/// for every `k ≥ 0` and `off` in `offsets`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPresentation {
    pub head: Vec<usize>,
    pub start: usize,
    pub offsets: Vec<usize>,
    pub period: usize,
}

impl IndexPresentation {
    /// The first `k` indices.
    pub fn take(&self, k: usize) -> Vec<usize> {
        let tail = (0..).flat_map(|r| {
            self.offsets
                .iter()
                .map(move |&o| self.start + o + r * self.period)
        });
        self.head.iter().copied().chain(tail).take(k).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneSubsequence {
    pub indices: IndexPresentation,
    pub subsequence: EpSequence<CnfOrdinal>,
    pub limit: CnfOrdinal,
}

/// The positions `n` where `x_n` is the least of `{x_m : m ≥ n}`. The
/// values there are nondecreasing and eventually equal to the least
/// cycle value, which is the limit.
pub fn ord_monotone_subsequence(s: &EpSequence<CnfOrdinal>) -> MonotoneSubsequence {
    let p = s.prefix().len();
    let mu = s.cycle().iter().min().expect("nonempty cycle").clone();
    let mut head = Vec::new();
    let mut tail_min = mu.clone();
    for n in (0..p).rev() {
        if s.prefix()[n] <= tail_min {
            head.push(n);
            tail_min = s.prefix()[n].clone();
        }
    }
    head.reverse();
    let offsets: Vec<usize> = (0..s.cycle().len())
        .filter(|&j| s.cycle()[j] == mu)
        .collect();
    let prefix = head.iter().map(|&n| s.prefix()[n].clone()).collect();
    MonotoneSubsequence {
        indices: IndexPresentation {
            head,
            start: p,
            offsets,
            period: s.cycle().len(),
        },
        subsequence: EpSequence::new(prefix, vec![mu.clone()]).expect("nonempty"),
        limit: mu,
    }
}

/// A point of `[0, ω₁)` outside every `[0, α)`: the successor of the
/// largest `α`.
pub fn ord_no_finite_subcover(alphas: &[CnfOrdinal]) -> Result<CnfOrdinal> {
    let max = alphas
        .iter()
        .max()
        .ok_or_else(|| Error::EmptyInput("cover".into()))?;
    Ok(max.succ())
}
