//! Directed sets, nets, subnets, and the net characterizations of
//! topological properties.

mod directed;
mod net;
mod subnet;
mod verify;

pub use directed::{
    check_directed, directed_catalog, neighborhood_directed, product_directed, reverse_inclusion,
    DirectedSet, DirectedViolation, Relation,
};
pub use net::{cluster_points, net_limits, IndexSet, Net};
pub use subnet::{
    is_subnet, subnet_from_cluster, AffineTail, ClusterSubnet, Reindexing, SubnetMap,
};
pub use verify::{
    net_catalog, openness_witness, sequence_catalog, verify_compact_subnets, verify_hausdorff_net,
    verify_net_continuity, verify_net_continuity_with, verify_net_openness, CompactSubnetReport,
    ContinuityProbe, ContinuityReport, DoubleLimitWitness, HausdorffNetReport, NetOpennessReport,
    NetWitness, OpennessEntry,
};
