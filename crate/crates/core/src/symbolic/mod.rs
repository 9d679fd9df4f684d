//! Finitely presented infinite spaces and the certificates they support.

mod binary;
mod cc;
mod fan;
mod franklin;
mod omega;
mod ordinal;
mod product;

pub use binary::{binary_digit, diagonal_certificate, diagonal_witness, DiagonalCertificate};
pub use cc::{
    cc_certificate, cc_is_open, cc_seq_coreflection_is_open, cc_seq_limits, cc_sequentially_open,
    sample_atoms, Atom, CcCertificate, SetDescriptor, TagRegistry,
};
pub use fan::{fan_defeat_basis, fan_is_open, FanDefeat, FanSet, NatSet};
pub use franklin::{
    franklin_build, franklin_check_open_reflection, FranklinMap, FranklinPresentation,
    FranklinReflection,
};
pub use omega::{omega_plus_one_is_open, OmegaPoint, OmegaSet};
pub use ordinal::{
    omega1_certificate, ord_is_open, ord_leq, ord_max, ord_monotone_subsequence,
    ord_no_finite_subcover, ord_seq_limits, ord_succ, ord_sup, CnfOrdinal, IndexPresentation,
    MonotoneSubsequence, Omega1Certificate, OrdinalInterval, OrdinalPoint, OrdinalSet,
};
pub use product::{
    product_certificate, product_is_open, product_pointwise_limit, union_of_terms, PointwiseLimit,
    ProductCertificate, ProductSet, RationalInterval,
};

use crate::error::{Error, Result};

/// One of the symbolic families, with its openness oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicSpace {
    CountableComplement(TagRegistry),
    OrdinalInterval(OrdinalInterval),
    OmegaPlusOne,
    SequentialFan,
    BinaryProduct(RationalInterval),
}

/// A subset of a symbolic space, in that family's descriptor language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicSet {
    Cc(SetDescriptor),
    Ordinal(OrdinalSet),
    Omega(OmegaSet),
    Fan(FanSet),
    Product(ProductSet),
}

impl SymbolicSpace {
    pub fn name(&self) -> &'static str {
        match self {
            SymbolicSpace::CountableComplement(_) => "countable-complement",
            SymbolicSpace::OrdinalInterval(_) => "ordinal-interval",
            SymbolicSpace::OmegaPlusOne => "omega-plus-one",
            SymbolicSpace::SequentialFan => "sequential-fan",
            SymbolicSpace::BinaryProduct(_) => "binary-product",
        }
    }

    pub fn is_open(&self, a: &SymbolicSet) -> Result<bool> {
        match (self, a) {
            (SymbolicSpace::CountableComplement(reg), SymbolicSet::Cc(d)) => cc_is_open(d, reg),
            (SymbolicSpace::OrdinalInterval(i), SymbolicSet::Ordinal(o)) => ord_is_open(i, o),
            (SymbolicSpace::OmegaPlusOne, SymbolicSet::Omega(o)) => Ok(omega_plus_one_is_open(o)),
            (SymbolicSpace::SequentialFan, SymbolicSet::Fan(f)) => Ok(fan_is_open(f)),
            (SymbolicSpace::BinaryProduct(i), SymbolicSet::Product(p)) => product_is_open(i, p),
            _ => Err(Error::InvalidDescriptor(format!(
                "descriptor does not belong to the {} family",
                self.name()
            ))),
        }
    }
}
