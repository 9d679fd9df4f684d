use std::fmt;

use crate::error::{Error, Result};

/// An eventually periodic sequence: the `prefix` once, then `cycle`
/// repeated forever.
///
/// Convergence in every space this crate models depends only on the set
/// of values that occur infinitely often, which for this presentation is
/// exactly the set of cycle values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpSequence<T = usize> {
    prefix: Vec<T>,
    cycle: Vec<T>,
}

impl<T: Clone> EpSequence<T> {
    pub fn new(prefix: Vec<T>, cycle: Vec<T>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidSequence("cycle must be nonempty".into()));
        }
        Ok(EpSequence { prefix, cycle })
    }

    pub fn constant(x: T) -> Self {
        EpSequence {
            prefix: vec![],
            cycle: vec![x],
        }
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    /// The `n`-th term.
    pub fn get(&self, n: usize) -> &T {
        if n < self.prefix.len() {
            &self.prefix[n]
        } else {
            &self.cycle[(n - self.prefix.len()) % self.cycle.len()]
        }
    }

    pub fn first(&self) -> &T {
        self.get(0)
    }

    /// Every term, forever.
    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.prefix.iter().chain(self.cycle.iter().cycle())
    }

    /// Every value that appears anywhere in the sequence.
    pub fn values(&self) -> impl Iterator<Item = &T> + '_ {
        self.prefix.iter().chain(self.cycle.iter())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> EpSequence<U> {
        EpSequence {
            prefix: self.prefix.iter().map(&f).collect(),
            cycle: self.cycle.iter().map(&f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<EpSequence<U>, E> {
        Ok(EpSequence {
            prefix: self.prefix.iter().map(&f).collect::<Result<_, _>>()?,
            cycle: self.cycle.iter().map(&f).collect::<Result<_, _>>()?,
        })
    }

    /// The subsequence `(x_{n+1})`: drops the first term.
    pub fn tail(&self) -> Self {
        if self.prefix.is_empty() {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left(1);
            EpSequence {
                prefix: vec![],
                cycle,
            }
        } else {
            EpSequence {
                prefix: self.prefix[1..].to_vec(),
                cycle: self.cycle.clone(),
            }
        }
    }

    /// The subsequence `(x_{start + step·k})_k`; `step` must be positive.
    pub fn arithmetic_subsequence(&self, start: usize, step: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidSequence("step must be positive".into()));
        }
        // From index p = |prefix| on, the terms have period |cycle|; the
        // subsequence has period |cycle| / gcd(|cycle|, step) once its
        // indices pass p.
        let p = self.prefix.len();
        let l = self.cycle.len();
        let mut k0 = 0;
        while start + step * k0 < p {
            k0 += 1;
        }
        let period = l / gcd(l, step);
        let prefix = (0..k0)
            .map(|k| self.get(start + step * k).clone())
            .collect();
        let cycle = (k0..k0 + period)
            .map(|k| self.get(start + step * k).clone())
            .collect();
        Ok(EpSequence { prefix, cycle })
    }
}

impl<T: Clone + PartialEq> EpSequence<T> {
    /// Both presentations describe the same infinite sequence.
    pub fn same_terms(&self, other: &EpSequence<T>) -> bool {
        let start = self.prefix.len().max(other.prefix.len());
        let period = lcm(self.cycle.len(), other.cycle.len());
        (0..start + period).all(|n| self.get(n) == other.get(n))
    }

    /// The cycle is a single repeated value.
    pub fn eventually_constant(&self) -> Option<&T> {
        let v = &self.cycle[0];
        self.cycle.iter().all(|c| c == v).then_some(v)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `[p0,p1|c0,c1]`, the sequence literal syntax.
impl<T: fmt::Display> fmt::Display for EpSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_joined(f, &self.prefix)?;
        f.write_str("|")?;
        write_joined(f, &self.cycle)?;
        f.write_str("]")
    }
}

impl<T: fmt::Display> fmt::Debug for EpSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
