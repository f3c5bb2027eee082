//! Width of the node partial order and a minimum chain cover.
//!
//! Each node `u` spans the interval `[min_u, max_u]` in string space; `u`
//! precedes `v` when `max_u` is strictly below `min_v` (intervals strictly
//! separated), and nodes whose intervals collapse to the same single string
//! are equivalent. The width `p` is the size of a largest antichain of this
//! order, which by Dilworth's theorem equals the minimum number of chains
//! covering all nodes. Matching-statistics queries keep at most one
//! contiguous candidate segment per chain, so `p` bounds their working state.
//!
//! The cover is computed the classical way: treat every comparable pair as an
//! edge of a bipartite graph between two copies of the node set, find a
//! maximum matching with augmenting paths, read chains off the matched edges,
//! and extract a witness antichain of size `p` from the matching's vertex
//! cover.

use crate::graph::NodeId;
use crate::order::{Item, JointColexOrder};
use crate::{Error, Result};

/// How two nodes relate in the induced partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeOrdering {
    Less,
    Greater,
    Incomparable,
    /// All four strings (`min` and `max` of both nodes) are equal.
    Equivalent,
}

/// Compare nodes by their `[min, max]` string intervals.
pub fn node_compare(order: &JointColexOrder, u: NodeId, v: NodeId) -> Result<NodeOrdering> {
    let n = order.n();
    if u >= n {
        return Err(Error::NodeOutOfRange(u));
    }
    if v >= n {
        return Err(Error::NodeOutOfRange(v));
    }
    let (u_min, u_max) = (order.rank(Item::min(u)), order.rank(Item::max(u)));
    let (v_min, v_max) = (order.rank(Item::min(v)), order.rank(Item::max(v)));
    if u_min == u_max && v_min == v_max && u_min == v_min {
        Ok(NodeOrdering::Equivalent)
    } else if u_max < v_min {
        Ok(NodeOrdering::Less)
    } else if v_max < u_min {
        Ok(NodeOrdering::Greater)
    } else {
        Ok(NodeOrdering::Incomparable)
    }
}

/// A partition of the nodes into `p` chains of the node partial order, plus
/// a witness antichain of the same size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<NodeId>>,
    chain_of: Vec<usize>,
    pos_in_chain: Vec<usize>,
    antichain: Vec<NodeId>,
}

impl ChainDecomposition {
    /// The width: number of chains, equal to the largest antichain size.
    pub fn p(&self) -> usize {
        self.chains.len()
    }

    pub fn chains(&self) -> &[Vec<NodeId>] {
        &self.chains
    }

    pub fn chain_of(&self, u: NodeId) -> usize {
        self.chain_of[u]
    }

    pub fn pos_in_chain(&self, u: NodeId) -> usize {
        self.pos_in_chain[u]
    }

    /// A set of `p` pairwise incomparable nodes.
    pub fn antichain(&self) -> &[NodeId] {
        &self.antichain
    }

    pub(crate) fn from_chains(chains: Vec<Vec<NodeId>>, antichain: Vec<NodeId>, n: usize) -> Self {
        let mut chain_of = vec![0; n];
        let mut pos_in_chain = vec![0; n];
        for (k, chain) in chains.iter().enumerate() {
            for (i, &u) in chain.iter().enumerate() {
                chain_of[u] = k;
                pos_in_chain[u] = i;
            }
        }
        ChainDecomposition {
            chains,
            chain_of,
            pos_in_chain,
            antichain,
        }
    }
}

/// Compute the width and a minimum chain cover of the node order.
pub fn compute_width(order: &JointColexOrder) -> Result<ChainDecomposition> {
    let n = order.n();
    if n == 0 {
        return Ok(ChainDecomposition::from_chains(Vec::new(), Vec::new(), 0));
    }

    // Strict order: u < v iff Less, or Equivalent broken by node id so that
    // equivalent nodes line up in one deterministic chain.
    let mut below: Vec<BitRow> = vec![BitRow::new(n); n];
    let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let less = match node_compare(order, u, v)? {
                NodeOrdering::Less => true,
                NodeOrdering::Equivalent => u < v,
                _ => false,
            };
            if less {
                below[u].set(v);
                adj[u].push(v);
            }
        }
    }
    // The relation is transitive by construction; verify rather than trust.
    for u in 0..n {
        for &v in &adj[u] {
            if !below[v].subset_of(&below[u]) {
                return Err(Error::Internal(format!(
                    "node order not transitive at {u} < {v}"
                )));
            }
        }
    }

    let matching = max_bipartite_matching(n, &adj);

    // Chains follow matched edges: u's matched partner is its successor.
    let mut chains = Vec::new();
    for head in 0..n {
        if matching.match_right[head].is_some() {
            continue;
        }
        let mut chain = vec![head];
        let mut cur = head;
        while let Some(next) = matching.match_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    let p = chains.len();

    // Koenig: vertices alternating-reachable from unmatched left vertices
    // give a minimum vertex cover; nodes untouched by the cover on both
    // sides form a maximum antichain.
    let (reach_left, reach_right) = alternating_reach(n, &adj, &matching);
    let antichain: Vec<NodeId> = (0..n)
        .filter(|&v| reach_left[v] && !reach_right[v])
        .collect();

    if antichain.len() != p {
        return Err(Error::Internal(format!(
            "antichain witness has size {} but the cover has {p} chains",
            antichain.len()
        )));
    }
    for (ai, &a) in antichain.iter().enumerate() {
        for &b in &antichain[ai + 1..] {
            if node_compare(order, a, b)? != NodeOrdering::Incomparable {
                return Err(Error::Internal(format!(
                    "antichain witness contains comparable nodes {a}, {b}"
                )));
            }
        }
    }
    for chain in &chains {
        for w in chain.windows(2) {
            let ok = match node_compare(order, w[0], w[1])? {
                NodeOrdering::Less => true,
                NodeOrdering::Equivalent => w[0] < w[1],
                _ => false,
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "chain breaks order between nodes {} and {}",
                    w[0], w[1]
                )));
            }
        }
    }

    Ok(ChainDecomposition::from_chains(chains, antichain, n))
}

struct Matching {
    match_left: Vec<Option<NodeId>>,
    match_right: Vec<Option<NodeId>>,
}

/// Kuhn's augmenting-path matching; left vertices are tried in id order and
/// neighbors are listed in id order, so the result is deterministic.
fn max_bipartite_matching(n: usize, adj: &[Vec<NodeId>]) -> Matching {
    let mut match_left: Vec<Option<NodeId>> = vec![None; n];
    let mut match_right: Vec<Option<NodeId>> = vec![None; n];
    let mut seen = vec![false; n];
    for u in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        try_augment(u, adj, &mut match_left, &mut match_right, &mut seen);
    }
    Matching {
        match_left,
        match_right,
    }
}

fn try_augment(
    u: NodeId,
    adj: &[Vec<NodeId>],
    match_left: &mut Vec<Option<NodeId>>,
    match_right: &mut Vec<Option<NodeId>>,
    seen: &mut Vec<bool>,
) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(owner) => try_augment(owner, adj, match_left, match_right, seen),
        };
        if free {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}

/// Vertices reachable from unmatched left vertices along alternating paths
/// (non-matching edges left to right, matching edges right to left).
fn alternating_reach(n: usize, adj: &[Vec<NodeId>], m: &Matching) -> (Vec<bool>, Vec<bool>) {
    let mut reach_left = vec![false; n];
    let mut reach_right = vec![false; n];
    let mut queue: Vec<NodeId> = (0..n).filter(|&u| m.match_left[u].is_none()).collect();
    for &u in &queue {
        reach_left[u] = true;
    }
    while let Some(u) = queue.pop() {
        for &v in &adj[u] {
            if m.match_left[u] == Some(v) || reach_right[v] {
                continue;
            }
            reach_right[v] = true;
            if let Some(owner) = m.match_right[v] {
                if !reach_left[owner] {
                    reach_left[owner] = true;
                    queue.push(owner);
                }
            }
        }
    }
    (reach_left, reach_right)
}

/// Fixed-size bit row used for the transitivity check.
#[derive(Clone)]
struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn subset_of(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::order::compute_joint_order;

    #[test]
    fn node_compare_examples() {
        let width2 = compute_joint_order(&fixtures::width2()).unwrap();
        assert_eq!(
            node_compare(&width2, 3, 4).unwrap(),
            NodeOrdering::Incomparable
        );
        let path3 = compute_joint_order(&fixtures::path3()).unwrap();
        assert_eq!(node_compare(&path3, 0, 1).unwrap(), NodeOrdering::Less);
        assert_eq!(node_compare(&path3, 1, 0).unwrap(), NodeOrdering::Greater);
        let twins = compute_joint_order(&fixtures::twins()).unwrap();
        assert_eq!(node_compare(&twins, 0, 1).unwrap(), NodeOrdering::Equivalent);
    }

    #[test]
    fn node_compare_range_check() {
        let o = compute_joint_order(&fixtures::twins()).unwrap();
        assert!(matches!(
            node_compare(&o, 0, 2),
            Err(Error::NodeOutOfRange(2))
        ));
    }

    #[test]
    fn width_path3_single_chain() {
        let o = compute_joint_order(&fixtures::path3()).unwrap();
        let d = compute_width(&o).unwrap();
        assert_eq!(d.p(), 1);
        assert_eq!(d.chains(), &[vec![3, 0, 1, 2]]);
    }

    #[test]
    fn width_cycle2_is_one() {
        let o = compute_joint_order(&fixtures::cycle2()).unwrap();
        assert_eq!(compute_width(&o).unwrap().p(), 1);
    }

    #[test]
    fn width_twins_equivalent_nodes_share_chain() {
        let o = compute_joint_order(&fixtures::twins()).unwrap();
        let d = compute_width(&o).unwrap();
        assert_eq!(d.p(), 1);
        assert_eq!(d.chains(), &[vec![0, 1]]);
    }

    #[test]
    fn width_width2_with_witness() {
        let o = compute_joint_order(&fixtures::width2()).unwrap();
        let d = compute_width(&o).unwrap();
        assert_eq!(d.p(), 2);
        assert_eq!(d.antichain(), &[3, 4]);
        // mappings are consistent with the chain lists
        for (k, chain) in d.chains().iter().enumerate() {
            for (i, &u) in chain.iter().enumerate() {
                assert_eq!(d.chain_of(u), k);
                assert_eq!(d.pos_in_chain(u), i);
            }
        }
    }

    #[test]
    fn width_de_bruijn3_is_one() {
        let o = compute_joint_order(&fixtures::de_bruijn3()).unwrap();
        let d = compute_width(&o).unwrap();
        assert_eq!(d.p(), 1);
        assert_eq!(d.chains()[0].len(), 8);
    }

    #[test]
    fn width_empty_graph() {
        let g = crate::graph::LabeledGraph::new(Vec::new(), Vec::new()).unwrap();
        let o = compute_joint_order(&g).unwrap();
        assert_eq!(compute_width(&o).unwrap().p(), 0);
    }
}
