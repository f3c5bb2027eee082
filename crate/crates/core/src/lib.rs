//! Indexing of node-labeled graphs by the co-lexicographic order of the
//! smallest and largest strings readable backward from each node.
//!
//! The pipeline is: parse or construct a [`LabeledGraph`] in which every node
//! has at least one incoming edge (adding a `$` sentinel source if needed),
//! sort the `2n` min/max backward strings into a [`JointColexOrder`], derive
//! [`LcpArrays`] over the sorted sequence, cover the nodes with the minimum
//! number of chains of the induced partial order ([`ChainDecomposition`],
//! whose size is the width `p`), and bundle everything into an [`MsIndex`]
//! that answers matching-statistics and occurrence queries while tracking at
//! most one contiguous candidate segment per chain.
//!
//! Every construction has a definition-level counterpart used for
//! cross-checking: prefix expansion for the backward strings
//! ([`order::min_string_prefix`]), direct walk simulation for matching
//! statistics ([`ms::matching_statistics_naive`]), and exhaustive search for
//! the width ([`check::max_antichain_exhaustive`]). The [`check`] module ties
//! these together into the self-check harness behind `colex check`.

pub mod check;
pub mod corpus;
pub mod doc;
mod error;
pub mod fixtures;
pub mod graph;
pub mod lcp;
pub mod ms;
pub mod order;
pub mod width;

pub use error::{Error, Result};
pub use graph::{EdgeLabeledGraph, LabeledGraph, NodeId, ValidationReport, Violation, SENTINEL};
pub use lcp::{lcp_pair, LcpArrays, LcpValue};
pub use ms::{matching_statistics_naive, MsIndex, OccurrenceSet};
pub use order::{
    compute_joint_order, max_string_prefix, min_string_prefix, Item, JointColexOrder, Side,
};
pub use width::{compute_width, node_compare, ChainDecomposition, NodeOrdering};
