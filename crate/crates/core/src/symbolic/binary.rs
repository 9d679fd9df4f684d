//! Binary digits of exact rationals, and the diagonal point on which a
//! chosen subsequence of digit functions alternates.
//!
//! The sequence `x_n(r) = digit n of r` lives in `{0,1}^[0,1)`. For any
//! increasing `k_0 < k_1 < …` the point `r` built here has digit `k_n`
//! equal to `n mod 2`, so the subsequence `x_{k_n}` diverges at `r`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `⌊r·2^(n+1)⌋ mod 2` for `0 ≤ r < 1`. Terminating expansions are read
/// without an all-ones tail.
pub fn binary_digit(r: &BigRational, n: u32) -> Result<u8> {
    if r < &BigRational::zero() || r >= &BigRational::one() {
        return Err(Error::RationalOutOfRange(r.to_string()));
    }
    let scaled = r * BigRational::from_integer(BigInt::one() << (n + 1));
    let digit = scaled.floor().to_integer().mod_floor(&BigInt::from(2));
    Ok(if digit.is_zero() { 0 } else { 1 })
}

/// `Σ 2^-(k_n + 1)` over odd positions `n`.
pub fn diagonal_witness(indices: &[u32]) -> Result<BigRational> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing);
    }
    let mut r = BigRational::zero();
    for &k in indices.iter().skip(1).step_by(2) {
        r += BigRational::new(BigInt::one(), BigInt::one() << (k + 1));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalCertificate {
    pub point: BigRational,
    /// `(k_n, digit k_n of the point)`.
    pub digits: Vec<(u32, u8)>,
}

impl DiagonalCertificate {
    /// Digit `k_n` is `n mod 2` for every `n`.
    pub fn alternates(&self) -> bool {
        self.digits
            .iter()
            .enumerate()
            .all(|(n, &(_, d))| d as usize == n % 2)
    }
}

pub fn diagonal_certificate(indices: &[u32]) -> Result<DiagonalCertificate> {
    let point = diagonal_witness(indices)?;
    let digits = indices
        .iter()
        .map(|&k| binary_digit(&point, k).map(|d| (k, d)))
        .collect::<Result<_>>()?;
    Ok(DiagonalCertificate { point, digits })
}
