//! A finite space presented as a quotient of a disjoint sum of copies of
//! `ω+1`, one copy per sample sequence converging to its first term.

use super::omega::{omega_plus_one_is_open, OmegaPoint, OmegaSet};
use crate::error::{Error, Result};
use crate::finite_top::{FiniteSpace, PointSet};
use crate::sequences::{is_sequentially_open, seq_limits, EpSequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklinPresentation {
    base: FiniteSpace,
    samples: Vec<EpSequence>,
}

impl FranklinPresentation {
    /// Each sample must converge to its first term, and every constant
    /// sequence must be present.
    pub fn new(base: FiniteSpace, samples: Vec<EpSequence>) -> Result<Self> {
        for (i, s) in samples.iter().enumerate() {
            if !seq_limits(s, &base)?.contains(*s.first()) {
                return Err(Error::InvalidPresentation(format!(
                    "sample {i} {s} does not converge to its first term"
                )));
            }
        }
        for x in 0..base.carrier_size() {
            if !samples
                .iter()
                .any(|s| s.same_terms(&EpSequence::constant(x)))
            {
                return Err(Error::InvalidPresentation(format!(
                    "constant sequence at {x} missing"
                )));
            }
        }
        Ok(FranklinPresentation { base, samples })
    }

    /// Constants, plus for every set that is not open the sequence
    /// `y, v, v, …` where the constant `v` outside the set converges to `y`
    /// inside it.
    pub fn witness_complete(base: &FiniteSpace) -> Result<Self> {
        let mut samples: Vec<EpSequence> =
            (0..base.carrier_size()).map(EpSequence::constant).collect();
        for a in PointSet::all_subsets(base.carrier_size()) {
            if let Some(w) = is_sequentially_open(base, &a)?.witness {
                let v = *w.sequence.first();
                let s = EpSequence::new(vec![w.limit], vec![v])?;
                if !samples.contains(&s) {
                    samples.push(s);
                }
            }
        }
        Self::new(base.clone(), samples)
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn samples(&self) -> &[EpSequence] {
        &self.samples
    }
}

/// The quotient map from the sum of copies onto the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklinMap {
    samples: Vec<EpSequence>,
    base_size: usize,
}

impl FranklinMap {
    pub fn copies(&self) -> usize {
        self.samples.len()
    }

    /// `∞ ↦ x_0`, `n ↦ x_n` on the copy of sample `(x_n)`.
    pub fn apply(&self, copy: usize, p: OmegaPoint) -> usize {
        let s = &self.samples[copy];
        match p {
            OmegaPoint::Infinity => *s.first(),
            OmegaPoint::Nat(n) => *s.get(n),
        }
    }

    /// The trace of `f⁻¹(a)` on one copy.
    pub fn preimage(&self, copy: usize, a: &PointSet) -> OmegaSet {
        let s = &self.samples[copy];
        OmegaSet {
            infinity: a.contains(*s.first()),
            naturals: s.map(|&x| a.contains(x)),
        }
    }

    /// Every base point is the image of some `∞`.
    pub fn is_surjective(&self) -> bool {
        (0..self.base_size).all(|x| self.samples.iter().any(|s| *s.first() == x))
    }
}

pub fn franklin_build(p: &FranklinPresentation) -> FranklinMap {
    FranklinMap {
        samples: p.samples.clone(),
        base_size: p.base.carrier_size(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklinReflection {
    pub open_in_base: bool,
    pub preimage_open: bool,
    /// A copy whose trace is not open.
    pub failing_copy: Option<usize>,
}

impl FranklinReflection {
    pub fn agrees(&self) -> bool {
        self.open_in_base == self.preimage_open
    }
}

/// Compares openness of `a` with openness of `f⁻¹(a)`, one copy at a time.
pub fn franklin_check_open_reflection(
    p: &FranklinPresentation,
    a: &PointSet,
) -> Result<FranklinReflection> {
    let open_in_base = p.base.is_open(a)?;
    let f = franklin_build(p);
    let failing_copy = (0..f.copies()).find(|&c| !omega_plus_one_is_open(&f.preimage(c, a)));
    Ok(FranklinReflection {
        open_in_base,
        preimage_open: failing_copy.is_none(),
        failing_copy,
    })
}
