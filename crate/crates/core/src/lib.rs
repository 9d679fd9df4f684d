//! Point-set convergence on finite and finitely-presented spaces.
//!
//! Finite spaces are checked exhaustively; a handful of infinite spaces
//! (countable-complement, ordinal intervals, `ω+1`, the sequential fan,
//! powers of `{0,1}`) are described symbolically so that their standard
//! counterexamples can be stated and verified as certificates.

pub mod claims;
pub mod cli;
pub mod error;
pub mod filters;
pub mod finite_top;
pub mod io;
pub mod nets;
pub mod sequences;
pub mod symbolic;

pub use error::{Error, Result};
pub use finite_top::{FiniteSpace, Partition, PointMap, PointSet};
