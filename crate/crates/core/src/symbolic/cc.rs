//! The countable-complement topology on an uncountable set.
//!
//! Points are named atoms. A registered tag `t` names a countably infinite
//! set whose members are the atoms `t#0`, `t#1`, .... Uncountable sets only
//! occur as complements of countable ones.
//!
//! A sequence converges here iff it is eventually constant, so its limits
//! depend only on its tail value set; eventually periodic presentations
//! realize every such tail behaviour.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::EpSequence;

pub type Atom = String;

/// Declared names of countably infinite sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TagRegistry {
    tags: BTreeSet<String>,
}

impl TagRegistry {
    pub fn new<I, S>(tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        TagRegistry {
            tags: tags.into_iter().map(Into::into).collect(),
        }
    }

    pub fn contains(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }

    fn check(&self, tag: &str) -> Result<()> {
        if self.contains(tag) {
            Ok(())
        } else {
            Err(Error::UnregisteredTag(tag.to_string()))
        }
    }
}

/// A subset of the uncountable carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetDescriptor {
    Empty,
    Full,
    Finite(BTreeSet<Atom>),
    /// Everything except the listed atoms.
    Cofinite(BTreeSet<Atom>),
    Countable(String),
    /// Everything outside the tagged countable set.
    CoCountable(String),
}

fn tag_of(atom: &str) -> Option<&str> {
    atom.split_once('#').map(|(t, _)| t)
}

impl SetDescriptor {
    pub fn finite<I, S>(atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        SetDescriptor::Finite(atoms.into_iter().map(Into::into).collect())
    }

    pub fn cofinite<I, S>(atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        SetDescriptor::Cofinite(atoms.into_iter().map(Into::into).collect())
    }

    /// Checks tags against the registry.
    pub fn validate(&self, reg: &TagRegistry) -> Result<()> {
        match self {
            SetDescriptor::Countable(t) | SetDescriptor::CoCountable(t) => reg.check(t),
            _ => Ok(()),
        }
    }

    pub fn contains(&self, atom: &str) -> bool {
        match self {
            SetDescriptor::Empty => false,
            SetDescriptor::Full => true,
            SetDescriptor::Finite(s) => s.contains(atom),
            SetDescriptor::Cofinite(s) => !s.contains(atom),
            SetDescriptor::Countable(t) => tag_of(atom) == Some(t),
            SetDescriptor::CoCountable(t) => tag_of(atom) != Some(t),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            SetDescriptor::Empty => SetDescriptor::Full,
            SetDescriptor::Full => SetDescriptor::Empty,
            SetDescriptor::Finite(s) => SetDescriptor::Cofinite(s.clone()),
            SetDescriptor::Cofinite(s) => SetDescriptor::Finite(s.clone()),
            SetDescriptor::Countable(t) => SetDescriptor::CoCountable(t.clone()),
            SetDescriptor::CoCountable(t) => SetDescriptor::Countable(t.clone()),
        }
    }

    /// Countable (finite or tagged).
    pub fn is_countable(&self) -> bool {
        match self {
            SetDescriptor::Empty | SetDescriptor::Finite(_) | SetDescriptor::Countable(_) => true,
            SetDescriptor::Full | SetDescriptor::Cofinite(_) | SetDescriptor::CoCountable(_) => {
                false
            }
        }
    }

    fn normalized(self) -> Self {
        match self {
            SetDescriptor::Finite(s) if s.is_empty() => SetDescriptor::Empty,
            SetDescriptor::Cofinite(s) if s.is_empty() => SetDescriptor::Full,
            d => d,
        }
    }

    /// Intersection, for the combinations that stay inside the descriptor
    /// language without further case analysis.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        use SetDescriptor::*;
        let out = match (self, other) {
            (Empty, _) | (_, Empty) => Empty,
            (Full, d) | (d, Full) => d.clone(),
            (Finite(a), d) | (d, Finite(a)) => {
                Finite(a.iter().filter(|x| d.contains(x)).cloned().collect())
            }
            (Cofinite(a), Cofinite(b)) => Cofinite(a.union(b).cloned().collect()),
            (Countable(s), Countable(t)) if s == t => Countable(s.clone()),
            (CoCountable(s), CoCountable(t)) if s == t => CoCountable(s.clone()),
            (Countable(s), CoCountable(t)) | (CoCountable(t), Countable(s)) if s == t => Empty,
            (a, b) => return Err(Error::DescriptorClosure(format!("{a} ∩ {b}"))),
        };
        Ok(out.normalized())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        Ok(self
            .complement()
            .intersection(&other.complement())?
            .complement())
    }
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<Atom>| s.iter().cloned().collect::<Vec<_>>().join(",");
        match self {
            SetDescriptor::Empty => f.write_str("∅"),
            SetDescriptor::Full => f.write_str("X"),
            SetDescriptor::Finite(s) => write!(f, "{{{}}}", list(s)),
            SetDescriptor::Cofinite(s) => write!(f, "X∖{{{}}}", list(s)),
            SetDescriptor::Countable(t) => write!(f, "{t}"),
            SetDescriptor::CoCountable(t) => write!(f, "X∖{t}"),
        }
    }
}

/// Open iff empty or with countable complement.
pub fn cc_is_open(d: &SetDescriptor, reg: &TagRegistry) -> Result<bool> {
    d.validate(reg)?;
    Ok(matches!(d.clone().normalized(), SetDescriptor::Empty) || d.complement().is_countable())
}

/// Limits of a sequence of atoms: its eventual value if the cycle is
/// constant, otherwise none.
pub fn cc_seq_limits(s: &EpSequence<Atom>) -> SetDescriptor {
    let tail: BTreeSet<Atom> = s.cycle().iter().cloned().collect();
    // For a candidate y, X ∖ (tail ∖ {y}) is an open neighbourhood of y.
    // The sequence is eventually inside it iff tail ⊆ {y}.
    let mut limits = BTreeSet::new();
    for y in &tail {
        let nbhd = SetDescriptor::Cofinite(tail.iter().filter(|&x| x != y).cloned().collect());
        if tail.iter().all(|x| nbhd.contains(x)) {
            limits.insert(y.clone());
        }
    }
    // Points off the tail have the neighbourhood X ∖ tail, which the tail
    // never enters.
    SetDescriptor::Finite(limits).normalized()
}

/// Atoms of `d`, at most `k` of them, in a fixed order. Fresh atoms are
/// named `x0`, `x1`, ... and skip anything excluded.
pub fn sample_atoms(d: &SetDescriptor, k: usize) -> Vec<Atom> {
    match d {
        SetDescriptor::Empty => vec![],
        SetDescriptor::Finite(s) => s.iter().take(k).cloned().collect(),
        SetDescriptor::Countable(t) => (0..k).map(|i| format!("{t}#{i}")).collect(),
        _ => (0..)
            .map(|i| format!("x{i}"))
            .filter(|a| d.contains(a))
            .take(k)
            .collect(),
    }
}

/// No sequence in the complement has a limit in `d`.
///
/// Since limits are eventual constant values, the sampled sequences
/// (constants and two-value oscillations over atoms of the complement)
/// cover every limit behaviour.
pub fn cc_sequentially_open(d: &SetDescriptor, reg: &TagRegistry) -> Result<bool> {
    d.validate(reg)?;
    let outside = sample_atoms(&d.complement(), 3);
    let mut samples: Vec<EpSequence<Atom>> =
        outside.iter().cloned().map(EpSequence::constant).collect();
    for a in &outside {
        for b in &outside {
            if a != b {
                samples.push(EpSequence::new(vec![], vec![a.clone(), b.clone()])?);
            }
        }
    }
    for s in &samples {
        if let SetDescriptor::Finite(lim) = cc_seq_limits(s) {
            if lim.iter().any(|y| d.contains(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A set that is sequentially open but not open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcCertificate {
    pub set: SetDescriptor,
    pub open: bool,
    pub sequentially_open: bool,
}

impl CcCertificate {
    pub fn holds(&self) -> bool {
        self.sequentially_open && !self.open
    }
}

pub fn cc_certificate(d: &SetDescriptor, reg: &TagRegistry) -> Result<CcCertificate> {
    Ok(CcCertificate {
        set: d.clone(),
        open: cc_is_open(d, reg)?,
        sequentially_open: cc_sequentially_open(d, reg)?,
    })
}

/// Openness in the topology of sequentially open sets of the
/// countable-complement space. Every set qualifies, so it is discrete.
pub fn cc_seq_coreflection_is_open(d: &SetDescriptor, reg: &TagRegistry) -> Result<bool> {
    cc_sequentially_open(d, reg)
}
