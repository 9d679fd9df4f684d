//! Finite topological spaces with explicit open-set families.
//!
//! Everything here is small enough to check exhaustively: carriers up to
//! 64 points for constructions, up to 4 points for enumeration.

mod compact;
mod constructions;
mod enumerate;
mod point_set;
mod space;

pub use compact::{
    check_fip_equivalence, finite_subcover, is_compact_by_covers, CoverCertificate, FipReport,
};
pub use constructions::{disjoint_sum, product, projections, quotient, rectangle, subspace};
pub use enumerate::{enumerate_topologies, MAX_ENUMERATION};
pub use point_set::{PointSet, MAX_CARRIER};
pub use space::{FiniteSpace, Partition, PointMap};
