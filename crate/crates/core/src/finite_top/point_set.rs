use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier a [`PointSet`] can describe.
pub const MAX_CARRIER: usize = 64;

/// A subset of the carrier `{0, .., size - 1}`, stored as a bitmask.
///
/// Ordering is by carrier size first and then by mask value, which gives
/// every family of sets a fixed, reproducible listing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    size: u8,
    bits: u64,
}

impl PointSet {
    pub fn empty(size: usize) -> Self {
        assert!(size <= MAX_CARRIER, "carrier of size {size} too large");
        PointSet {
            size: size as u8,
            bits: 0,
        }
    }

    pub fn full(size: usize) -> Self {
        PointSet {
            bits: full_mask(size),
            ..PointSet::empty(size)
        }
    }

    pub fn singleton(size: usize, x: usize) -> Result<Self> {
        let mut s = PointSet::empty(size);
        s.insert(x)?;
        Ok(s)
    }

    /// Builds a set from a mask, rejecting bits beyond the carrier.
    pub fn from_bits(size: usize, bits: u64) -> Result<Self> {
        if size > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size,
                max: MAX_CARRIER,
            });
        }
        if bits & !full_mask(size) != 0 {
            let point = 63 - bits.leading_zeros() as usize;
            return Err(Error::PointOutOfRange { point, size });
        }
        Ok(PointSet {
            size: size as u8,
            bits,
        })
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(size: usize, points: I) -> Result<Self> {
        let mut s = PointSet::empty(size);
        for p in points {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub(crate) fn from_bits_unchecked(size: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(size) == 0);
        PointSet {
            size: size as u8,
            bits,
        }
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.size as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, x: usize) -> Result<()> {
        if x >= self.carrier_size() {
            return Err(Error::PointOutOfRange {
                point: x,
                size: self.carrier_size(),
            });
        }
        self.bits |= 1 << x;
        Ok(())
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.carrier_size() && self.bits & (1 << x) != 0
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.carrier_size())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.size, other.size);
        PointSet {
            size: self.size,
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.size, other.size);
        PointSet {
            size: self.size,
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn difference(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.size, other.size);
        PointSet {
            size: self.size,
            bits: self.bits & !other.bits,
        }
    }

    #[inline]
    pub fn complement(&self) -> PointSet {
        PointSet {
            size: self.size,
            bits: !self.bits & full_mask(self.carrier_size()),
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest member, the deterministic choice used by every witness
    /// construction in the crate.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.carrier_size()).filter(move |&i| bits & (1 << i) != 0)
    }

    /// All `2^size` subsets of a carrier, in mask order.
    pub fn all_subsets(size: usize) -> impl Iterator<Item = PointSet> {
        assert!(
            size < MAX_CARRIER,
            "cannot enumerate subsets of {size} points"
        );
        (0..1u64 << size).map(move |bits| PointSet::from_bits_unchecked(size, bits))
    }

    pub(crate) fn ensure_carrier(&self, size: usize) -> Result<()> {
        if self.carrier_size() != size {
            return Err(Error::CarrierMismatch {
                expected: size,
                found: self.carrier_size(),
            });
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn full_mask(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// `-` for the empty set, otherwise comma-separated point indices. This is
/// the line syntax of the space and filter file formats.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self, self.size)
    }
}
